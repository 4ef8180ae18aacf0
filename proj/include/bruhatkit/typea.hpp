#pragma once

#include "bruhatkit/bruhat.hpp"

#include <memory>
#include <vector>

namespace bruhatkit {

using Assignment = std::vector<std::vector<int>>;

// Theta subset of Sigma(A_{n-1}) for a composition: delete the simple
// roots sitting at the partial sums.
SimpleSubset subset_from_composition(int n, const std::vector<int>& comp);

// Coordinate permutation sigma with w * e_x = e_{sigma(x)} (type A only).
std::vector<int> coordinate_permutation(const WeylGroup& weyl, int w);

struct TypeAPrediction {
  int rep = 0;
  Assignment assignment;  // rows: eigenvalue blocks, cols: flag blocks
  int fix_dim = 0;
  int unstable_dim = 0;
};

// Combinatorial predictions for SL(n) with eigenvalue multiplicities
// `mults` and flag type `blocks`: one entry per W_H \ W / W_Theta coset,
// keyed by the contingency-table assignment matrix.
struct TypeABridge {
  std::shared_ptr<RootSystem> rs;
  std::shared_ptr<WeylGroup> weyl;
  SimpleSubset delta, theta;
  SplitElement h;
  DoubleCosetTable cosets;
  std::vector<TypeAPrediction> entries;

  const TypeAPrediction* find(const Assignment& a) const;
};

TypeABridge build_typea_bridge(const std::vector<int>& mults, const std::vector<int>& blocks);

}  // namespace bruhatkit
