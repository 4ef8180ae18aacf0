#include "bruhatkit/flagdyn.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bruhatkit::flagdyn {

namespace {

constexpr double kIntersectionCos = 0.999;   // principal-angle cutoff for subspace containment
constexpr double kFiniteDiffStep = 1e-4;
constexpr double kRankThreshold = 1e-6;
constexpr double kUnstableCut = 1.648;       // between exp(0) and exp(1)

std::string assignment_str(const Assignment& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
  }
  os << "]";
  return os.str();
}

Eigen::MatrixXd step_projector(const FlagPoint& b, int d) {
  const Eigen::MatrixXd q = b.frame.leftCols(d);
  return q * q.transpose();
}

// Stacked projectors of all proper flag steps, as one long vector.
Eigen::VectorXd projector_stack(const FlagPoint& b) {
  const auto sums = b.type.partial_sums();
  const int n = b.type.n;
  Eigen::VectorXd v(static_cast<int>(sums.size()) * n * n);
  int off = 0;
  for (int d : sums) {
    const Eigen::MatrixXd p = step_projector(b, d);
    v.segment(off, n * n) = Eigen::Map<const Eigen::VectorXd>(p.data(), n * n);
    off += n * n;
  }
  return v;
}

Eigen::MatrixXd random_orthogonal(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = gauss(rng);
  return orthonormalize(g);
}

}  // namespace

std::vector<int> FlagType::partial_sums() const {
  std::vector<int> s;
  int t = 0;
  for (int b : blocks) {
    t += b;
    if (t < n) s.push_back(t);
  }
  if (t != n) throw std::invalid_argument("flag blocks do not sum to n");
  return s;
}

int FlagType::dim() const {
  int d = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (std::size_t k = j + 1; k < blocks.size(); ++k) d += blocks[j] * blocks[k];
  return d;
}

SplitFlow SplitFlow::from_multiplicities(const std::vector<int>& mults) {
  const int n = std::accumulate(mults.begin(), mults.end(), 0);
  if (n < 1) throw std::invalid_argument("empty multiplicities");
  SplitFlow h;
  h.eigen_mults = mults;
  h.h_diag.resize(n);
  const int p = static_cast<int>(mults.size());
  double mean = 0.0;
  {
    int pos = 0;
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < mults[i]; ++k) {
        h.h_diag(pos++) = static_cast<double>(p - 1 - i);
      }
    mean = h.h_diag.sum() / n;
  }
  h.h_diag.array() -= mean;
  return h;
}

std::vector<int> SplitFlow::partial_sums() const {
  std::vector<int> s;
  int t = 0;
  for (int m : eigen_mults) s.push_back(t += m);
  return s;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m.cols(); ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

IwasawaFactors iwasawa(const Eigen::MatrixXd& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("iwasawa: square matrix required");
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::MatrixXd q = qr.householderQ();
  const int n = static_cast<int>(g.rows());
  for (int i = 0; i < n; ++i) {
    if (std::abs(r(i, i)) < 1e-13 * (1.0 + g.norm()))
      throw std::invalid_argument("iwasawa: singular input");
    if (r(i, i) < 0) {
      q.col(i) = -q.col(i);
      r.row(i) = -r.row(i);
    }
  }
  IwasawaFactors f;
  f.k = q;
  f.a = Eigen::MatrixXd(r.diagonal().asDiagonal());
  f.n = f.a.inverse() * r;
  return f;
}

FlagPoint make_flag(const Eigen::MatrixXd& invertible_frame, FlagType type) {
  if (invertible_frame.rows() != type.n || invertible_frame.cols() != type.n)
    throw std::invalid_argument("frame size does not match flag type");
  return FlagPoint{orthonormalize(invertible_frame), std::move(type)};
}

FlagPoint random_flag(const FlagType& type, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(type.n, type.n);
  for (int i = 0; i < type.n; ++i)
    for (int j = 0; j < type.n; ++j) g(i, j) = gauss(rng);
  return make_flag(g, type);
}

double chordal_distance(const FlagPoint& a, const FlagPoint& b) {
  if (a.type.n != b.type.n || a.type.blocks != b.type.blocks)
    throw std::invalid_argument("chordal_distance: flag types differ");
  double d = 0.0;
  for (int s : a.type.partial_sums())
    d = std::max(d, (step_projector(a, s) - step_projector(b, s)).norm());
  return d;
}

FlagPoint flow(const SplitFlow& h, double t, const FlagPoint& b) {
  if (h.h_diag.size() != b.type.n) throw std::invalid_argument("flow: dimension mismatch");
  Eigen::MatrixXd m = (t * h.h_diag.array()).exp().matrix().asDiagonal() * b.frame;
  m /= m.cwiseAbs().maxCoeff();  // keep the exponentials in range
  return FlagPoint{orthonormalize(m), b.type};
}

Assignment block_assignment_of(const SplitFlow& h, const FlagPoint& b) {
  const auto msums = h.partial_sums();
  const auto fsums = b.type.partial_sums();
  const int p = static_cast<int>(msums.size());
  const int q = static_cast<int>(b.type.blocks.size());
  // d(i,j) = dim(V_j ∩ (E_1 ⊕ ... ⊕ E_i)) via principal angles; with the
  // eigenspaces spanned by coordinate vectors these are singular values
  // of the top rows of the flag frame.
  std::vector<std::vector<int>> d(p + 1, std::vector<int>(q + 1, 0));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      const int cj = (j == q) ? b.type.n : fsums[j - 1];
      const Eigen::MatrixXd sub = b.frame.leftCols(cj).topRows(msums[i - 1]);
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(sub).singularValues();
      int cnt = 0;
      for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > kIntersectionCos) ++cnt;
      d[i][j] = cnt;
    }
  Assignment a(p, std::vector<int>(q, 0));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) a[i - 1][j - 1] = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
  return a;
}

std::vector<Assignment> contingency_tables(const std::vector<int>& rows,
                                           const std::vector<int>& cols) {
  const int p = static_cast<int>(rows.size()), q = static_cast<int>(cols.size());
  std::vector<Assignment> out;
  Assignment cur(p, std::vector<int>(q, 0));
  std::vector<int> row_rem = rows, col_rem = cols;
  // Cell-by-cell recursion in row-major order.
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == p * q) {
      for (int r : row_rem)
        if (r != 0) return;
      out.push_back(cur);
      return;
    }
    const int i = cell / q, j = cell % q;
    const int last_in_row = (j == q - 1);
    const int hi = std::min(row_rem[i], col_rem[j]);
    for (int v = last_in_row ? hi : 0; v <= hi; ++v) {
      cur[i][j] = v;
      row_rem[i] -= v;
      col_rem[j] -= v;
      if (!(last_in_row && row_rem[i] != 0)) self(self, cell + 1);
      row_rem[i] += v;
      col_rem[j] += v;
      cur[i][j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<NumericalComponent> enumerate_fixed_components(const SplitFlow& h,
                                                           const FlagType& type,
                                                           std::uint64_t seed,
                                                           int samples_per_component) {
  if (h.h_diag.size() != type.n)
    throw std::invalid_argument("enumerate_fixed_components: dimension mismatch");
  std::mt19937_64 rng(seed);
  const auto tables = contingency_tables(h.eigen_mults, type.blocks);
  const int p = static_cast<int>(h.eigen_mults.size());
  const int q = type.steps();
  std::vector<int> mult_offset(p, 0);
  for (int i = 1; i < p; ++i) mult_offset[i] = mult_offset[i - 1] + h.eigen_mults[i - 1];

  std::vector<NumericalComponent> comps;
  for (const auto& table : tables) {
    NumericalComponent c;
    c.id = static_cast<int>(comps.size());
    c.assignment = table;
    // Eigenspace-adapted base flag: each step takes the prescribed number
    // of fresh coordinate directions from each eigenvalue block.
    Eigen::MatrixXd base = Eigen::MatrixXd::Zero(type.n, type.n);
    std::vector<int> used(p, 0);
    int col = 0;
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < p; ++i)
        for (int k = 0; k < table[i][j]; ++k) base(mult_offset[i] + used[i]++, col++) = 1.0;
    c.samples.push_back(FlagPoint{base, type});
    for (int s = 1; s < samples_per_component; ++s) {
      Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(type.n, type.n);
      for (int i = 0; i < p; ++i)
        rot.block(mult_offset[i], mult_offset[i], h.eigen_mults[i], h.eigen_mults[i]) =
            random_orthogonal(h.eigen_mults[i], rng);
      c.samples.push_back(FlagPoint{rot * base, type});
    }
    const DimEstimate est = estimate_component_dim(h, c);
    c.est_dim = est.dim;
    c.sv_gap = est.gap;
    comps.push_back(std::move(c));
  }
  return comps;
}

DimEstimate estimate_component_dim(const SplitFlow& h, const NumericalComponent& c) {
  if (c.samples.empty()) throw std::invalid_argument("component has no sample points");
  const FlagPoint& b = c.samples.front();
  if (b.type.dim() == 0)  // trivial flag manifold: a single point
    return {0, std::numeric_limits<double>::infinity()};
  const int n = b.type.n;
  // Generators of k_H: rotations inside each eigenvalue block.  Each is a
  // plane rotation, so the exponential is an exact Givens matrix.
  struct Gen {
    int a, bidx;
  };
  std::vector<Gen> gens;
  int off = 0;
  for (int m : h.eigen_mults) {
    for (int a = 0; a < m; ++a)
      for (int bb = a + 1; bb < m; ++bb) gens.push_back({off + a, off + bb});
    off += m;
  }
  if (gens.empty()) return {0, std::numeric_limits<double>::infinity()};

  const double eps = kFiniteDiffStep;
  Eigen::MatrixXd d(projector_stack(b).size(), static_cast<int>(gens.size()));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int sign = -1; sign <= 1; sign += 2) {
      Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(n, n);
      const double ang = sign * eps;
      rot(gens[g].a, gens[g].a) = std::cos(ang);
      rot(gens[g].bidx, gens[g].bidx) = std::cos(ang);
      rot(gens[g].a, gens[g].bidx) = -std::sin(ang);
      rot(gens[g].bidx, gens[g].a) = std::sin(ang);
      const Eigen::VectorXd stack = projector_stack(FlagPoint{rot * b.frame, b.type});
      if (sign < 0)
        d.col(static_cast<int>(g)) = -stack;
      else
        d.col(static_cast<int>(g)) += stack;
    }
    d.col(static_cast<int>(g)) /= 2.0 * eps;
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(d).singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankThreshold) ++rank;
  double gap = std::numeric_limits<double>::infinity();
  if (rank > 0 && rank < sv.size() && sv(rank) > 0.0) gap = sv(rank - 1) / sv(rank);
  return {rank, gap};
}

namespace {

// Graph-chart coordinates of a flag near the base frame q: solve for the
// block-upper U with q^T * frame * U = I + L, L strictly block-lower.
Eigen::VectorXd chart_coords(const Eigen::MatrixXd& q, const FlagPoint& b,
                             const std::vector<int>& block_of,
                             const std::vector<std::pair<int, int>>& basis) {
  const int n = static_cast<int>(q.rows());
  const Eigen::MatrixXd c = q.transpose() * b.frame;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  int col = 0;
  const int nblocks = block_of[n - 1] + 1;
  for (int j = 0; j < nblocks; ++j) {
    int bsize = 0, start = col;
    while (start + bsize < n && block_of[start + bsize] == j) ++bsize;
    const int s = start + bsize;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(s, bsize);
    rhs.bottomRows(bsize).setIdentity();
    const Eigen::MatrixXd u = c.topLeftCorner(s, s).partialPivLu().solve(rhs);
    const Eigen::MatrixXd full = c.leftCols(s) * u;  // n x bsize
    l.block(0, start, n, bsize) = full;
    col = s;
  }
  Eigen::VectorXd v(static_cast<int>(basis.size()));
  for (std::size_t m = 0; m < basis.size(); ++m) v(static_cast<int>(m)) = l(basis[m].first, basis[m].second);
  return v;
}

}  // namespace

int unstable_rank(const SplitFlow& h, const FlagPoint& fixed_sample) {
  const FlagPoint& b = fixed_sample;
  const int n = b.type.n;
  std::vector<int> block_of(n);
  {
    int blk = 0, cnt = 0;
    for (int i = 0; i < n; ++i) {
      block_of[i] = blk;
      if (++cnt == b.type.blocks[blk]) {
        ++blk;
        cnt = 0;
      }
    }
  }
  std::vector<std::pair<int, int>> basis;  // (row, col) with block(row) > block(col)
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (block_of[r] > block_of[c]) basis.emplace_back(r, c);
  const int d = static_cast<int>(basis.size());
  if (d != b.type.dim()) throw std::logic_error("chart dimension mismatch");
  if (d == 0) return 0;

  const double eps = kFiniteDiffStep;
  Eigen::MatrixXd map(d, d);
  for (int m = 0; m < d; ++m) {
    Eigen::VectorXd diff = Eigen::VectorXd::Zero(d);
    for (int sign = -1; sign <= 1; sign += 2) {
      Eigen::MatrixXd pert = Eigen::MatrixXd::Identity(n, n);
      pert(basis[m].first, basis[m].second) += sign * eps;
      const FlagPoint moved = make_flag(b.frame * pert, b.type);
      diff += sign * chart_coords(b.frame, flow(h, 1.0, moved), block_of, basis);
    }
    map.col(m) = diff / (2.0 * eps);
  }
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(map).eigenvalues();
  int cnt = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) > kUnstableCut) ++cnt;
  return cnt;
}

LimitResult limit_point(const SplitFlow& h, const FlagPoint& b, int direction,
                        const std::vector<NumericalComponent>* components, int k_max,
                        double tol, bool record_curve) {
  LimitResult res;
  res.limit = b;
  const double t = direction >= 0 ? 1.0 : -1.0;
  if (chordal_distance(flow(h, t, b), b) < tol) res.converged = true;  // already fixed, k = 0
  for (int k = 1; !res.converged && k <= k_max; ++k) {
    FlagPoint next = flow(h, t, res.limit);
    const double step = chordal_distance(next, res.limit);
    res.limit = std::move(next);
    res.steps = k;
    if (record_curve) res.curve.push_back(step);
    if (step < tol) {
      res.converged = true;
      break;
    }
  }
  if (res.converged && components) {
    const Assignment a = block_assignment_of(h, res.limit);
    for (const auto& c : *components)
      if (c.assignment == a) {
        res.component = c.id;
        break;
      }
  }
  return res;
}

VerifyReport verify_corollary(const SplitFlow& h, const FlagType& type, int trials,
                              std::uint64_t seed,
                              const std::vector<std::pair<Assignment, int>>* predicted,
                              int expected_count) {
  if (trials < 1) throw std::invalid_argument("verify_corollary: trials must be >= 1");
  VerifyReport rep;
  rep.n = type.n;
  rep.mults = h.eigen_mults;
  rep.type = type;
  rep.seed = seed;
  rep.trials = trials;
  rep.components = enumerate_fixed_components(h, type, seed);

  // Every enumerated component must really consist of fixed points.
  for (const auto& c : rep.components)
    for (const auto& s : c.samples)
      if (chordal_distance(flow(h, 1.7, s), s) > 1e-9)
        rep.violations.push_back("component " + assignment_str(c.assignment) +
                                 " sample is not fixed by the flow");

  rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rep.components.size(); ++i)
    for (std::size_t j = i + 1; j < rep.components.size(); ++j)
      for (const auto& si : rep.components[i].samples)
        for (const auto& sj : rep.components[j].samples)
          rep.min_pairwise_distance =
              std::min(rep.min_pairwise_distance, chordal_distance(si, sj));
  if (rep.components.size() > 1 && rep.min_pairwise_distance <= 0.1)
    rep.violations.push_back("distinct components closer than 0.1 in projector distance");

  // Z_H-sampled motions must stay inside their component.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto msums = h.partial_sums();
  std::vector<int> offsets{0};
  for (int s : msums) offsets.push_back(s);
  for (int t = 0; t < trials; ++t) {
    const auto& comp = rep.components[rng() % rep.components.size()];
    const auto& sample = comp.samples[rng() % comp.samples.size()];
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(type.n, type.n);
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
      const int m = offsets[i + 1] - offsets[i];
      Eigen::MatrixXd blockm = Eigen::MatrixXd::Identity(m, m);
      for (int a = 0; a < m; ++a)
        for (int bb = 0; bb < m; ++bb) blockm(a, bb) += 0.4 * gauss(rng);
      z.block(offsets[i], offsets[i], m, m) = blockm;
    }
    if (std::abs(z.determinant()) < 1e-8) continue;  // resample-free skip of a bad draw
    const FlagPoint moved = make_flag(z * sample.frame, type);
    if (block_assignment_of(h, moved) != comp.assignment)
      rep.violations.push_back("trial " + std::to_string(t) + ": Z_H motion left component " +
                               assignment_str(comp.assignment));
  }

  if (predicted) {
    for (const auto& c : rep.components) {
      int dim = -1;
      for (const auto& [a, pd] : *predicted)
        if (a == c.assignment) dim = pd;
      rep.predicted_dims.push_back(dim);
      if (dim < 0)
        rep.violations.push_back("component " + assignment_str(c.assignment) +
                                 " has no combinatorial counterpart");
      else if (dim != c.est_dim)
        rep.violations.push_back("component " + assignment_str(c.assignment) +
                                 " dimension mismatch: est " + std::to_string(c.est_dim) +
                                 " vs predicted " + std::to_string(dim));
    }
    if (predicted->size() != rep.components.size())
      rep.violations.push_back("component count differs from double-coset count");
  } else {
    rep.predicted_dims.assign(rep.components.size(), -1);
  }
  if (expected_count >= 0 && expected_count != static_cast<int>(rep.components.size()))
    rep.violations.push_back("component count " + std::to_string(rep.components.size()) +
                             " differs from expected " + std::to_string(expected_count));
  return rep;
}

}  // namespace bruhatkit::flagdyn
