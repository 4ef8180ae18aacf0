#include "bruhatkit/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhatkit {

namespace {

RatVec unit(int dim, int i, long long c = 1) {
  RatVec v = zero_vec(dim);
  v[i] = Rat(c);
  return v;
}

void candidates_and_simple(Series s, int rank, int& dim, std::vector<RatVec>& cand,
                           std::vector<RatVec>& simple) {
  switch (s) {
    case Series::A: {
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      dim = rank + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) {
            RatVec v = zero_vec(dim);
            v[i] = Rat(1);
            v[j] = Rat(-1);
            cand.push_back(v);
          }
      for (int i = 0; i < rank; ++i) {
        RatVec v = zero_vec(dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        simple.push_back(v);
      }
      break;
    }
    case Series::B:
    case Series::C:
    case Series::D: {
      const int minr = (s == Series::D) ? 3 : 2;
      if (rank < minr) throw std::invalid_argument("rank too small for series");
      dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si = -1; si <= 1; si += 2)
            for (int sj = -1; sj <= 1; sj += 2) {
              RatVec v = zero_vec(dim);
              v[i] = Rat(si);
              v[j] = Rat(sj);
              cand.push_back(v);
            }
      if (s == Series::B)
        for (int i = 0; i < rank; ++i)
          for (int si = -1; si <= 1; si += 2) cand.push_back(unit(dim, i, si));
      if (s == Series::C)
        for (int i = 0; i < rank; ++i)
          for (int si = -1; si <= 1; si += 2) cand.push_back(unit(dim, i, 2 * si));
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec v = zero_vec(dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        simple.push_back(v);
      }
      if (s == Series::B) simple.push_back(unit(dim, rank - 1));
      if (s == Series::C) simple.push_back(unit(dim, rank - 1, 2));
      if (s == Series::D) {
        RatVec v = zero_vec(dim);
        v[rank - 2] = Rat(1);
        v[rank - 1] = Rat(1);
        simple.push_back(v);
      }
      break;
    }
    case Series::G: {
      if (rank != 2) throw std::invalid_argument("G series has rank 2 only");
      dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            RatVec v = zero_vec(3);
            v[i] = Rat(1);
            v[j] = Rat(-1);
            cand.push_back(v);
          }
      for (int i = 0; i < 3; ++i) {
        RatVec v(3, Rat(-1));
        v[i] = Rat(2);
        cand.push_back(v);
        cand.push_back(scaled(v, Rat(-1)));
      }
      simple.push_back(sub(unit(3, 0), unit(3, 1)));           // e1 - e2
      RatVec beta(3, Rat(1));
      beta[0] = Rat(-2);
      simple.push_back(beta);                                  // -2e1 + e2 + e3
      break;
    }
    case Series::F: {
      if (rank != 4) throw std::invalid_argument("F series has rank 4 only");
      dim = 4;
      for (int i = 0; i < 4; ++i)
        for (int si = -1; si <= 1; si += 2) cand.push_back(unit(4, i, si));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si = -1; si <= 1; si += 2)
            for (int sj = -1; sj <= 1; sj += 2) {
              RatVec v = zero_vec(4);
              v[i] = Rat(si);
              v[j] = Rat(sj);
              cand.push_back(v);
            }
      for (int m = 0; m < 16; ++m) {
        RatVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rat((m >> i) & 1 ? -1 : 1, 2);
        cand.push_back(v);
      }
      simple.push_back(sub(unit(4, 1), unit(4, 2)));
      simple.push_back(sub(unit(4, 2), unit(4, 3)));
      simple.push_back(unit(4, 3));
      RatVec h(4, Rat(-1, 2));
      h[0] = Rat(1, 2);
      simple.push_back(h);
      break;
    }
    case Series::E: {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E series has rank 6..8");
      dim = 8;
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          for (int si = -1; si <= 1; si += 2)
            for (int sj = -1; sj <= 1; sj += 2) {
              RatVec v = zero_vec(8);
              v[i] = Rat(si);
              v[j] = Rat(sj);
              cand.push_back(v);
            }
      for (int m = 0; m < 256; ++m) {
        if (__builtin_popcount(m) % 2 != 0) continue;  // even number of minus signs
        RatVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = Rat((m >> i) & 1 ? -1 : 1, 2);
        cand.push_back(v);
      }
      RatVec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      simple.push_back(a1);
      RatVec a2 = zero_vec(8);
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      simple.push_back(a2);
      for (int k = 0; k + 2 < 8 && static_cast<int>(simple.size()) < rank; ++k)
        simple.push_back(sub(unit(8, k + 1), unit(8, k)));
      simple.resize(rank);
      break;
    }
  }
}

}  // namespace

Series series_from_char(char c) {
  switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
  }
  throw std::invalid_argument(std::string("unknown series '") + c + "'");
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

RootSystem RootSystem::build(Series s, int rank) {
  if (rank < 1 || rank > 8) throw std::invalid_argument("rank out of range");
  RootSystem rs;
  rs.series_ = s;
  rs.rank_ = rank;

  std::vector<RatVec> cand, simple;
  candidates_and_simple(s, rank, rs.ambient_dim_, cand, simple);

  RatMat gram(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram[i][j] = dot(simple[i], simple[j]);

  // Keep candidates that are integer combinations of the simple roots
  // (this trims E8 down to E6/E7) and record the expansion.
  struct Entry {
    RatVec v;
    std::vector<long long> coords;
    long long height;
  };
  std::vector<Entry> entries;
  for (const auto& v : cand) {
    RatVec rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(simple[i], v);
    auto c = solve_square(gram, rhs);
    if (!c) throw std::logic_error("simple roots not independent");
    RatVec rebuilt = zero_vec(rs.ambient_dim_);
    bool integral = true;
    std::vector<long long> ic(rank);
    for (int i = 0; i < rank; ++i) {
      if ((*c)[i].denominator() != 1) integral = false;
      else ic[i] = (*c)[i].numerator();
      rebuilt = add(rebuilt, scaled(simple[i], (*c)[i]));
    }
    if (!integral || rebuilt != v) continue;
    long long h = 0;
    for (long long x : ic) h += x;
    entries.push_back({v, std::move(ic), h});
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.v < b.v;
  });

  rs.gram_ = gram;
  for (auto& e : entries) {
    rs.roots_.push_back(e.v);
    rs.coroots_.push_back(e.v);  // dot-product pairing: H_alpha is alpha itself
    rs.simple_coords_.push_back(e.coords);
    rs.positive_mask_.push_back(e.height > 0);
  }
  for (int r = 0; r < rs.root_count(); ++r) {
    rs.index_[vec_key(rs.roots_[r])] = r;
    if (rs.positive_mask_[r]) rs.positive_.push_back(r);
  }
  rs.simple_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    int idx = rs.root_index(simple[i]);
    if (idx < 0) throw std::logic_error("simple root missing from root list");
    rs.simple_[i] = idx;
  }
  rs.negation_.resize(rs.root_count());
  for (int r = 0; r < rs.root_count(); ++r) {
    int n = rs.root_index(scaled(rs.roots_[r], Rat(-1)));
    if (n < 0) throw std::logic_error("root set not symmetric");
    rs.negation_[r] = n;
  }
  for (int r : rs.positive_) {
    for (long long c : rs.simple_coords_[r])
      if (c < 0) throw std::logic_error("positive root with negative simple coordinate");
  }

  // Fundamental coweights: alpha_j(omega_i) = delta_ij.
  for (int i = 0; i < rank; ++i) {
    auto c = solve_square(gram, unit(rank, i));
    RatVec w = zero_vec(rs.ambient_dim_);
    for (int j = 0; j < rank; ++j) w = add(w, scaled(simple[j], (*c)[j]));
    rs.coweights_.push_back(std::move(w));
  }

  rs.reflect_table_.assign(rank, std::vector<int>(rs.root_count()));
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < rs.root_count(); ++r) {
      int img = rs.root_index(rs.reflect(i, rs.roots_[r]));
      if (img < 0) throw std::logic_error("reflection left the root set");
      rs.reflect_table_[i][r] = img;
    }
  return rs;
}

int RootSystem::root_index(const RatVec& v) const {
  auto it = index_.find(vec_key(v));
  return it == index_.end() ? -1 : it->second;
}

RatVec RootSystem::reflect(int simple_i, const RatVec& h) const {
  const RatVec& a = roots_[simple_[simple_i]];
  const Rat c = Rat(2) * dot(a, h) / dot(a, a);
  return sub(h, scaled(a, c));
}

RatVec RootSystem::ambient_of(const SplitElement& h) const {
  if (static_cast<int>(h.coweight_coords.size()) != rank_)
    throw std::invalid_argument("split element has wrong rank");
  RatVec v = zero_vec(ambient_dim_);
  for (int i = 0; i < rank_; ++i) v = add(v, scaled(coweights_[i], h.coweight_coords[i]));
  return v;
}

SplitElement RootSystem::split_element(RatVec coords) const {
  if (static_cast<int>(coords.size()) != rank_)
    throw std::invalid_argument("split element has wrong rank");
  bool closure = true;
  for (const auto& c : coords)
    if (c < Rat(0)) closure = false;
  return SplitElement{std::move(coords), closure};
}

RatVec RootSystem::regular_probe(int variant) const {
  RatVec coords(rank_);
  for (int i = 0; i < rank_; ++i) coords[i] = Rat(1 + variant * i);
  return ambient_of(SplitElement{coords, true});
}

SimpleSubset RootSystem::theta_of(const SplitElement& h) const {
  if (!h.chamber_closure_flag) throw std::invalid_argument("theta_of: H outside cl a+");
  if (static_cast<int>(h.coweight_coords.size()) != rank_)
    throw std::invalid_argument("split element has wrong rank");
  SimpleSubset theta;
  for (int i = 0; i < rank_; ++i) {
    if (h.coweight_coords[i] < Rat(0)) throw std::invalid_argument("theta_of: H outside cl a+");
    if (h.coweight_coords[i] == Rat(0)) theta.add(i);
  }
  return theta;
}

bool RootSystem::in_span(int root, SimpleSubset theta) const {
  const auto& c = simple_coords_[root];
  for (int i = 0; i < rank_; ++i)
    if (c[i] != 0 && !theta.contains(i)) return false;
  return true;
}

Subsystem RootSystem::subsystem(SimpleSubset delta) const {
  if (auto it = subsystem_cache_.find(delta.bits); it != subsystem_cache_.end())
    return it->second;
  Subsystem sub;
  sub.delta = delta;
  for (int r = 0; r < root_count(); ++r)
    if (in_span(r, delta)) sub.span_roots.push_back(r);
  for (int i : delta.indices(rank_)) sub.a_delta_basis.push_back(coroots_[simple_[i]]);
  // a_delta = exact null space of the delta rows of the pairing, expressed
  // back in ambient coordinates through the simple-coroot basis.
  RatMat rows;
  for (int i : delta.indices(rank_)) rows.push_back(gram_[i]);
  for (const auto& c : null_space(rows, rank_)) {
    RatVec v = zero_vec(ambient_dim_);
    for (int j = 0; j < rank_; ++j) v = add(v, scaled(coroots_[simple_[j]], c[j]));
    sub.orthocomplement_basis.push_back(std::move(v));
  }
  subsystem_cache_.emplace(delta.bits, sub);
  return sub;
}

RatVec RootSystem::project_pi_theta(SimpleSubset theta, const RatVec& h) const {
  if (theta.empty()) return zero_vec(ambient_dim_);
  auto it = projection_cache_.find(theta.bits);
  if (it == projection_cache_.end()) {
    const auto idx = theta.indices(rank_);
    RatMat p(ambient_dim_, RatVec(ambient_dim_, Rat(0)));
    for (int k = 0; k < ambient_dim_; ++k) {
      RatMat g(idx.size(), RatVec(idx.size()));
      RatVec rhs(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) g[i][j] = gram_[idx[i]][idx[j]];
        rhs[i] = roots_[simple_[idx[i]]][k];
      }
      auto c = solve_square(std::move(g), std::move(rhs));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (int row = 0; row < ambient_dim_; ++row)
          p[row][k] += coroots_[simple_[idx[i]]][row] * (*c)[i];
    }
    it = projection_cache_.emplace(theta.bits, std::move(p)).first;
  }
  const RatMat& p = it->second;
  RatVec out(ambient_dim_, Rat(0));
  for (int row = 0; row < ambient_dim_; ++row)
    for (int k = 0; k < ambient_dim_; ++k)
      if (h[k] != Rat(0) && p[row][k] != Rat(0)) out[row] += p[row][k] * h[k];
  return out;
}

bool RootSystem::is_regular(const RatVec& h) const {
  for (int r : positive_)
    if (eval(r, h) == Rat(0)) return false;
  return true;
}

std::vector<int> RootSystem::chamber_signs(const Subsystem& delta, const RatVec& h) const {
  for (int r : delta.span_roots)
    if (eval(r, h) == Rat(0))
      throw std::invalid_argument("chamber_signs: element is singular in a(delta)");
  std::vector<int> signs;
  for (int i : delta.delta.indices(rank_)) signs.push_back(sgn(eval(simple_[i], h)));
  return signs;
}

bool RootSystem::orthocomplement_sum_check(SimpleSubset theta, SimpleSubset delta) const {
  RatMat theta_rows, delta_rows;
  for (int i : theta.indices(rank_)) theta_rows.push_back(gram_[i]);
  for (int i : delta.indices(rank_)) delta_rows.push_back(gram_[i]);
  RatMat stacked;
  for (const auto& v : null_space(theta_rows, rank_)) stacked.push_back(v);
  for (const auto& v : null_space(delta_rows, rank_)) stacked.push_back(v);
  const int want = rank_ - theta.intersect(delta).count();
  return rank_of(stacked) == want;
}

}  // namespace bruhatkit
