#pragma once

#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

// Flag-manifold type over the delta-subsystem: the subset of delta (in
// dominant normal form) annihilating the projected split element.
struct FlagTypeDescriptor {
  SimpleSubset delta;
  SimpleSubset theta;  // subset of delta
  int dim = 0;
};

struct FixedComponent {
  int coset_rep = 0;
  SimpleSubset delta;          // Theta(X)
  RatVec projected_h;          // pi_delta(w * H_theta)
  std::vector<int> chamber_signs;  // signs of the delta simple roots on a(delta)^w
  FlagTypeDescriptor flag_type;
  int dim = 0;
};

struct BruhatCell {
  FixedComponent component;
  int unstable_dim = 0;
  int total_dim = 0;
};

struct GeneralizedDecomposition {
  SplitElement h;
  SimpleSubset theta;
  DoubleCosetTable cosets;
  std::vector<BruhatCell> cells;
};

// H_theta = sum of the fundamental coweights dual to Sigma \ theta.
SplitElement canonical_h_theta(const RootSystem& rs, SimpleSubset theta);

int flag_dim(const RootSystem& rs, SimpleSubset theta);

FixedComponent fixed_component(const RootSystem& rs, const WeylGroup& weyl,
                               const SplitElement& x, SimpleSubset theta, int w);
// Same, with an explicit H in place of the canonical choice for theta.
FixedComponent fixed_component_with(const RootSystem& rs, const WeylGroup& weyl,
                                    const SplitElement& x, const SplitElement& h_theta, int w);

bool lemma3_inclusion(const RootSystem& rs, const WeylGroup& weyl, SimpleSubset delta, int w);

int unstable_dim(const RootSystem& rs, const WeylGroup& weyl, const RatVec& h_ambient,
                 SimpleSubset theta, int w);

GeneralizedDecomposition generalized_decomposition(const RootSystem& rs, const WeylGroup& weyl,
                                                   const SplitElement& h, SimpleSubset theta);

bool disjointness_witness(const RootSystem& rs, const WeylGroup& weyl, const SplitElement& x,
                          SimpleSubset theta, int w, int w_prime);

GeneralizedDecomposition regular_bruhat(const RootSystem& rs, const WeylGroup& weyl,
                                        SimpleSubset theta);

}  // namespace bruhatkit
