#include "bruhatkit/bruhat.hpp"

#include <stdexcept>

namespace bruhatkit {

SplitElement canonical_h_theta(const RootSystem& rs, SimpleSubset theta) {
  RatVec coords(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) coords[i] = theta.contains(i) ? Rat(0) : Rat(1);
  return rs.split_element(std::move(coords));
}

int flag_dim(const RootSystem& rs, SimpleSubset theta) {
  int span = 0;
  for (int r : rs.positive_indices())
    if (rs.in_span(r, theta)) ++span;
  return static_cast<int>(rs.positive_indices().size()) - span;
}

FixedComponent fixed_component(const RootSystem& rs, const WeylGroup& weyl,
                               const SplitElement& x, SimpleSubset theta, int w) {
  return fixed_component_with(rs, weyl, x, canonical_h_theta(rs, theta), w);
}

FixedComponent fixed_component_with(const RootSystem& rs, const WeylGroup& weyl,
                                    const SplitElement& x, const SplitElement& h_theta, int w) {
  FixedComponent fc;
  fc.coset_rep = w;
  fc.delta = rs.theta_of(x);
  const Subsystem sub = rs.subsystem(fc.delta);

  const RatVec w_h = weyl.apply(w, rs.ambient_of(h_theta));
  fc.projected_h = rs.project_pi_theta(fc.delta, w_h);

  // Chamber a(delta)^w from a regular probe; a second independent probe
  // must land in the same chamber (Lemma items 1-2).
  const RatVec p1 = rs.project_pi_theta(fc.delta, weyl.apply(w, rs.regular_probe(0)));
  const RatVec p2 = rs.project_pi_theta(fc.delta, weyl.apply(w, rs.regular_probe(1)));
  fc.chamber_signs = rs.chamber_signs(sub, p1);
  if (fc.chamber_signs != rs.chamber_signs(sub, p2))
    throw std::logic_error("chamber probes disagree");

  // Walk the chamber to the dominant one of the delta-subsystem, dragging
  // the projected element along; the annihilating simple roots there are
  // the flag type in normal form.
  RatVec probe = p1;
  RatVec ph = fc.projected_h;
  const auto didx = fc.delta.indices(rs.rank());
  int guard = static_cast<int>(sub.span_roots.size()) + 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : didx) {
      if (rs.eval(rs.simple_indices()[i], probe) < Rat(0)) {
        probe = rs.reflect(i, probe);
        ph = rs.reflect(i, ph);
        moved = true;
        if (--guard < 0) throw std::logic_error("dominant chamber walk did not terminate");
        break;
      }
    }
  }
  fc.flag_type.delta = fc.delta;
  for (int i : didx)
    if (rs.eval(rs.simple_indices()[i], ph) == Rat(0)) fc.flag_type.theta.add(i);

  for (int r : sub.span_roots)
    if (rs.eval(r, fc.projected_h) > Rat(0)) ++fc.dim;
  fc.flag_type.dim = fc.dim;
  return fc;
}

bool lemma3_inclusion(const RootSystem& rs, const WeylGroup& weyl, SimpleSubset delta, int w) {
  const Subsystem sub = rs.subsystem(delta);
  const RatVec probe = rs.project_pi_theta(delta, weyl.apply(w, rs.regular_probe(0)));
  const int winv = weyl.inverse(w);
  for (int r : sub.span_roots) {
    if (rs.eval(r, probe) <= Rat(0)) continue;
    if (!rs.is_positive_root(weyl.apply_root(winv, r))) return false;
  }
  return true;
}

int unstable_dim(const RootSystem& rs, const WeylGroup& weyl, const RatVec& h_ambient,
                 SimpleSubset theta, int w) {
  const int winv = weyl.inverse(w);
  int d = 0;
  for (int r = 0; r < rs.root_count(); ++r) {
    if (rs.eval(r, h_ambient) <= Rat(0)) continue;
    const int pre = weyl.apply_root(winv, r);
    if (!rs.is_positive_root(pre) && !rs.in_span(pre, theta)) ++d;
  }
  return d;
}

GeneralizedDecomposition generalized_decomposition(const RootSystem& rs, const WeylGroup& weyl,
                                                   const SplitElement& h, SimpleSubset theta) {
  GeneralizedDecomposition gd;
  gd.h = h;
  gd.theta = theta;
  gd.cosets = weyl.double_cosets(rs.theta_of(h), theta);
  const SplitElement h_theta = canonical_h_theta(rs, theta);
  const RatVec h_amb = rs.ambient_of(h);
  for (int rep : gd.cosets.reps) {
    BruhatCell cell;
    cell.component = fixed_component_with(rs, weyl, h, h_theta, rep);
    cell.unstable_dim = unstable_dim(rs, weyl, h_amb, theta, rep);
    cell.total_dim = cell.component.dim + cell.unstable_dim;
    gd.cells.push_back(std::move(cell));
  }
  return gd;
}

bool disjointness_witness(const RootSystem& rs, const WeylGroup& weyl, const SplitElement& x,
                          SimpleSubset theta, int w, int w_prime) {
  const DoubleCosetTable table = weyl.double_cosets(rs.theta_of(x), theta);
  return table.coset_of(w) == table.coset_of(w_prime);
}

GeneralizedDecomposition regular_bruhat(const RootSystem& rs, const WeylGroup& weyl,
                                        SimpleSubset theta) {
  return generalized_decomposition(rs, weyl, canonical_h_theta(rs, SimpleSubset()), theta);
}

}  // namespace bruhatkit
