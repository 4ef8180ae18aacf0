#pragma once

#include "bruhatkit/exact.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace bruhatkit {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series series_from_char(char c);

// Subset of simple-root indices as a bitmask.
struct SimpleSubset {
  std::uint32_t bits = 0;

  SimpleSubset() = default;
  explicit SimpleSubset(std::uint32_t b) : bits(b) {}

  static SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1u); }
  static SimpleSubset of(std::initializer_list<int> idx) {
    SimpleSubset s;
    for (int i : idx) s.add(i);
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= (1u << i); }
  int count() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(SimpleSubset o) const { return (bits & ~o.bits) == 0; }
  SimpleSubset intersect(SimpleSubset o) const { return SimpleSubset(bits & o.bits); }
  SimpleSubset unite(SimpleSubset o) const { return SimpleSubset(bits | o.bits); }
  std::vector<int> indices(int rank) const {
    std::vector<int> v;
    for (int i = 0; i < rank; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }
  bool operator==(const SimpleSubset& o) const { return bits == o.bits; }
  bool operator!=(const SimpleSubset& o) const { return bits != o.bits; }
};

// Element of cl a+ in fundamental-coweight coordinates, so alpha_i(H) is
// simply the i-th coordinate.
struct SplitElement {
  RatVec coweight_coords;
  bool chamber_closure_flag = false;
};

struct Subsystem {
  SimpleSubset delta;
  std::vector<int> span_roots;              // indices of <delta> ∩ Pi
  std::vector<RatVec> a_delta_basis;        // coroots H_alpha, alpha in delta
  std::vector<RatVec> orthocomplement_basis;  // basis of a_delta
};

class RootSystem {
 public:
  static RootSystem build(Series s, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  std::string label() const;

  const std::vector<RatVec>& roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  const std::vector<int>& simple_indices() const { return simple_; }
  const std::vector<int>& positive_indices() const { return positive_; }
  const std::vector<RatVec>& coroots() const { return coroots_; }
  const RatMat& pairing() const { return gram_; }  // B_theta on simple coroots
  const std::vector<RatVec>& fundamental_coweights() const { return coweights_; }
  const std::vector<long long>& simple_coords(int root) const { return simple_coords_[root]; }

  bool is_positive_root(int root) const { return positive_mask_[root]; }
  int negation_of(int root) const { return negation_[root]; }
  int root_index(const RatVec& v) const;
  const RatVec& simple_root(int i) const { return roots_[simple_[i]]; }

  Rat eval(int root, const RatVec& h) const { return dot(roots_[root], h); }
  RatVec reflect(int simple_i, const RatVec& h) const;
  int reflect_root(int simple_i, int root) const { return reflect_table_[simple_i][root]; }

  RatVec ambient_of(const SplitElement& h) const;
  SplitElement split_element(RatVec coweight_coords) const;
  // Probe regular elements of a+: variant 0 is the sum of all fundamental
  // coweights, variant k>0 weights them 1, k+1, 2k+1, ...
  RatVec regular_probe(int variant = 0) const;

  SimpleSubset theta_of(const SplitElement& h) const;
  Subsystem subsystem(SimpleSubset delta) const;
  RatVec project_pi_theta(SimpleSubset theta, const RatVec& h) const;
  bool is_regular(const RatVec& h) const;
  std::vector<int> chamber_signs(const Subsystem& delta, const RatVec& h) const;
  bool orthocomplement_sum_check(SimpleSubset theta, SimpleSubset delta) const;
  bool in_span(int root, SimpleSubset theta) const;

 private:
  Series series_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<RatVec> roots_;
  std::vector<RatVec> coroots_;
  std::vector<int> simple_;
  std::vector<int> positive_;
  std::vector<char> positive_mask_;
  std::vector<int> negation_;
  std::vector<std::vector<long long>> simple_coords_;
  RatMat gram_;
  std::vector<RatVec> coweights_;
  std::vector<std::vector<int>> reflect_table_;
  std::unordered_map<std::string, int> index_;
  // memoized per-subset data; cheap to rebuild, hot in decomposition loops
  mutable std::unordered_map<std::uint32_t, Subsystem> subsystem_cache_;
  mutable std::unordered_map<std::uint32_t, RatMat> projection_cache_;
};

}  // namespace bruhatkit
