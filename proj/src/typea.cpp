#include "bruhatkit/typea.hpp"

#include <numeric>
#include <stdexcept>

namespace bruhatkit {

SimpleSubset subset_from_composition(int n, const std::vector<int>& comp) {
  int total = 0;
  std::vector<char> is_sum(n + 1, 0);
  for (int c : comp) {
    if (c < 1) throw std::invalid_argument("composition parts must be >= 1");
    total += c;
    is_sum[std::min(total, n)] = 1;
  }
  if (total != n) throw std::invalid_argument("composition does not sum to n");
  SimpleSubset theta;
  for (int x = 1; x < n; ++x)
    if (!is_sum[x]) theta.add(x - 1);
  return theta;
}

std::vector<int> coordinate_permutation(const WeylGroup& weyl, int w) {
  const RootSystem& rs = weyl.root_system();
  if (rs.series() != Series::A) throw std::invalid_argument("type A only");
  const int n = rs.ambient_dim();
  std::vector<int> sigma(n, -1);
  for (int x = 0; x < n; ++x) {
    RatVec e = zero_vec(n);
    e[x] = Rat(1);
    const RatVec img = weyl.apply(w, e);
    for (int y = 0; y < n; ++y)
      if (img[y] == Rat(1)) sigma[x] = y;
    if (sigma[x] < 0) throw std::logic_error("not a coordinate permutation");
  }
  return sigma;
}

const TypeAPrediction* TypeABridge::find(const Assignment& a) const {
  for (const auto& e : entries)
    if (e.assignment == a) return &e;
  return nullptr;
}

TypeABridge build_typea_bridge(const std::vector<int>& mults, const std::vector<int>& blocks) {
  const int n = std::accumulate(mults.begin(), mults.end(), 0);
  if (n != std::accumulate(blocks.begin(), blocks.end(), 0))
    throw std::invalid_argument("multiplicities and flag blocks must sum to the same n");
  if (n < 2) throw std::invalid_argument("need n >= 2");

  TypeABridge br;
  br.rs = std::make_shared<RootSystem>(RootSystem::build(Series::A, n - 1));
  br.weyl = std::make_shared<WeylGroup>(WeylGroup::generate(*br.rs));
  br.delta = subset_from_composition(n, mults);
  br.theta = subset_from_composition(n, blocks);

  // Split element with Theta(H) = delta: coweight coordinate 1 exactly at
  // the eigenvalue-block boundaries.
  RatVec coords(n - 1, Rat(1));
  for (int i : br.delta.indices(n - 1)) coords[i] = Rat(0);
  br.h = br.rs->split_element(std::move(coords));

  br.cosets = br.weyl->double_cosets(br.delta, br.theta);

  std::vector<int> row_of(n), col_of(n);
  {
    int pos = 0, blk = 0;
    for (int m : mults) {
      for (int k = 0; k < m; ++k) row_of[pos++] = blk;
      ++blk;
    }
    pos = 0;
    blk = 0;
    for (int b : blocks) {
      for (int k = 0; k < b; ++k) col_of[pos++] = blk;
      ++blk;
    }
  }

  const RatVec h_amb = br.rs->ambient_of(br.h);
  for (int rep : br.cosets.reps) {
    TypeAPrediction e;
    e.rep = rep;
    const FixedComponent fc = fixed_component(*br.rs, *br.weyl, br.h, br.theta, rep);
    e.fix_dim = fc.dim;
    e.unstable_dim = unstable_dim(*br.rs, *br.weyl, h_amb, br.theta, rep);
    const std::vector<int> sigma = coordinate_permutation(*br.weyl, rep);
    e.assignment.assign(mults.size(), std::vector<int>(blocks.size(), 0));
    for (int x = 0; x < n; ++x) e.assignment[row_of[sigma[x]]][col_of[x]]++;
    for (const auto& prev : br.entries)
      if (prev.assignment == e.assignment)
        throw std::logic_error("two double cosets map to the same assignment");
    br.entries.push_back(std::move(e));
  }
  return br;
}

}  // namespace bruhatkit
