#include "bruhatkit/exact.hpp"

#include <stdexcept>

namespace bruhatkit {

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec scaled(const RatVec& a, const Rat& c) {
  RatVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != Rat(0)) return false;
  return true;
}

std::string rat_str(const Rat& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::string vec_key(const RatVec& v) {
  std::string k;
  for (const auto& x : v) {
    k += rat_str(x);
    k += ',';
  }
  return k;
}

int rank_of(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == Rat(0)) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat piv = m[r][c];
    for (auto& x : m[r]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rat(0)) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_square: not square");
    a[i].push_back(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rat(0)) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    const Rat piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == Rat(0)) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<RatVec> null_space(const RatMat& rows_in, std::size_t n) {
  RatMat m = rows_in;
  const std::size_t rows = m.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == Rat(0)) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat piv = m[r][c];
    for (auto& x : m[r]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rat(0)) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = zero_vec(n);
    v[c] = Rat(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bruhatkit
