#pragma once

#include "bruhatkit/rootsys.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace bruhatkit {

struct DoubleCosetTable {
  SimpleSubset left;   // Delta
  SimpleSubset right;  // Theta
  std::vector<int> reps;        // minimal-length representative per coset
  std::vector<int> membership;  // element index -> coset index
  std::vector<int> sizes;
  int coset_of(int w) const { return membership[w]; }
  int count() const { return static_cast<int>(reps.size()); }
};

class WeylGroup {
 public:
  struct Element {
    std::vector<int> perm;  // action on the root index list
    std::vector<int> word;  // one reduced word, factors left to right
    int length = 0;
  };

  static std::size_t default_budget();
  static WeylGroup generate(const RootSystem& rs, std::size_t budget = default_budget());

  const RootSystem& root_system() const { return *rs_; }
  std::size_t order() const { return elems_.size(); }
  const Element& element(int w) const { return elems_[w]; }
  int identity() const { return 0; }
  int generator(int simple_i) const { return gens_[simple_i]; }

  int compose(int a, int b) const;  // a then b applied right-to-left: (ab)(x) = a(b(x))
  int inverse(int a) const;
  int index_of_perm(const std::vector<int>& perm) const;

  int apply_root(int w, int root) const { return elems_[w].perm[root]; }
  RatVec apply(int w, const RatVec& h) const;

  int longest_element() const { return longest_; }
  SimpleSubset dual_subset(SimpleSubset theta) const;
  std::vector<int> parabolic_subgroup(SimpleSubset theta) const;
  std::vector<int> stabilizer_of(const SplitElement& h) const;
  std::vector<int> coset_reps(SimpleSubset theta) const;
  DoubleCosetTable double_cosets(SimpleSubset delta, SimpleSubset theta) const;

  // Closure of the generators in theta, without the stabilizer cross-check.
  std::vector<int> subgroup_closure(SimpleSubset theta) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<Element> elems_;
  std::vector<RatMat> ambient_mats_;  // column j = image of the j-th basis vector
  std::vector<int> gens_;
  int longest_ = 0;
  std::unordered_map<std::string, int> index_;

  static std::string perm_key(const std::vector<int>& p);
};

}  // namespace bruhatkit
