#include "bruhatkit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bruhatkit {

std::string WeylGroup::perm_key(const std::vector<int>& p) {
  std::string k;
  k.reserve(p.size() * 2);
  for (int x : p) {
    k.push_back(static_cast<char>(x & 0xff));
    k.push_back(static_cast<char>((x >> 8) & 0xff));
  }
  return k;
}

std::size_t WeylGroup::default_budget() {
  if (const char* env = std::getenv("BRUHATKIT_BUDGET")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

WeylGroup WeylGroup::generate(const RootSystem& rs, std::size_t budget) {
  WeylGroup wg;
  wg.rs_ = &rs;
  const int nroots = rs.root_count();
  const int rank = rs.rank();

  std::vector<std::vector<int>> gen_perm(rank);
  for (int i = 0; i < rank; ++i) {
    gen_perm[i].resize(nroots);
    for (int r = 0; r < nroots; ++r) gen_perm[i][r] = rs.reflect_root(i, r);
  }

  Element id;
  id.perm.resize(nroots);
  std::iota(id.perm.begin(), id.perm.end(), 0);
  wg.elems_.push_back(id);
  wg.index_[perm_key(id.perm)] = 0;

  // BFS over right multiplication; depth is the length and the path a
  // reduced word.
  for (std::size_t head = 0; head < wg.elems_.size(); ++head) {
    for (int i = 0; i < rank; ++i) {
      const Element cur = wg.elems_[head];
      Element nxt;
      nxt.perm.resize(nroots);
      for (int r = 0; r < nroots; ++r) nxt.perm[r] = cur.perm[gen_perm[i][r]];
      const std::string key = perm_key(nxt.perm);
      if (wg.index_.count(key)) continue;
      nxt.word = cur.word;
      nxt.word.push_back(i);
      nxt.length = cur.length + 1;
      if (wg.elems_.size() >= budget)
        throw std::runtime_error("Weyl enumeration budget exceeded");
      wg.index_[key] = static_cast<int>(wg.elems_.size());
      wg.elems_.push_back(std::move(nxt));
    }
  }

  std::sort(wg.elems_.begin(), wg.elems_.end(), [](const Element& a, const Element& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  wg.index_.clear();
  for (std::size_t i = 0; i < wg.elems_.size(); ++i)
    wg.index_[perm_key(wg.elems_[i].perm)] = static_cast<int>(i);
  wg.gens_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    auto it = wg.index_.find(perm_key(gen_perm[i]));
    wg.gens_[i] = it->second;
  }

  // Longest element: unique maximal length, maps the simple roots to -Sigma.
  wg.longest_ = static_cast<int>(wg.elems_.size()) - 1;
  const int maxlen = wg.elems_[wg.longest_].length;
  if (wg.elems_.size() >= 2 && wg.elems_[wg.elems_.size() - 2].length == maxlen)
    throw std::logic_error("longest element is not unique");
  for (int i = 0; i < rank; ++i) {
    const int img = wg.elems_[wg.longest_].perm[rs.simple_indices()[i]];
    if (rs.is_positive_root(img)) throw std::logic_error("longest element does not negate Sigma");
  }

  // Ambient matrices make apply() a plain matvec instead of a word walk.
  const int dim = rs.ambient_dim();
  wg.ambient_mats_.resize(wg.elems_.size());
  for (std::size_t w = 0; w < wg.elems_.size(); ++w) {
    RatMat m(dim, RatVec(dim, Rat(0)));
    for (int j = 0; j < dim; ++j) {
      RatVec e = zero_vec(dim);
      e[j] = Rat(1);
      const auto& word = wg.elems_[w].word;
      for (auto it = word.rbegin(); it != word.rend(); ++it) e = rs.reflect(*it, e);
      for (int i = 0; i < dim; ++i) m[i][j] = e[i];
    }
    wg.ambient_mats_[w] = std::move(m);
  }

  // length = number of inversions, checked once per element.
  for (const Element& e : wg.elems_) {
    int inv = 0;
    for (int r : rs.positive_indices())
      if (!rs.is_positive_root(e.perm[r])) ++inv;
    if (inv != e.length) throw std::logic_error("length / inversion count mismatch");
  }
  return wg;
}

int WeylGroup::index_of_perm(const std::vector<int>& perm) const {
  auto it = index_.find(perm_key(perm));
  if (it == index_.end()) throw std::invalid_argument("permutation not in group");
  return it->second;
}

int WeylGroup::compose(int a, int b) const {
  const auto& pa = elems_[a].perm;
  const auto& pb = elems_[b].perm;
  std::vector<int> p(pa.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = pa[pb[r]];
  return index_of_perm(p);
}

int WeylGroup::inverse(int a) const {
  const auto& pa = elems_[a].perm;
  std::vector<int> p(pa.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[pa[r]] = static_cast<int>(r);
  return index_of_perm(p);
}

RatVec WeylGroup::apply(int w, const RatVec& h) const {
  const RatMat& m = ambient_mats_[w];
  const std::size_t dim = m.size();
  RatVec v(dim, Rat(0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (h[j] == Rat(0)) continue;
    for (std::size_t i = 0; i < dim; ++i)
      if (m[i][j] != Rat(0)) v[i] += m[i][j] * h[j];
  }
  return v;
}

SimpleSubset WeylGroup::dual_subset(SimpleSubset theta) const {
  SimpleSubset dual;
  const int rank = rs_->rank();
  for (int i : theta.indices(rank)) {
    const int img = rs_->negation_of(elems_[longest_].perm[rs_->simple_indices()[i]]);
    int j = -1;
    for (int k = 0; k < rank; ++k)
      if (rs_->simple_indices()[k] == img) j = k;
    if (j < 0) throw std::logic_error("dual of a simple root is not simple");
    dual.add(j);
  }
  return dual;
}

std::vector<int> WeylGroup::subgroup_closure(SimpleSubset theta) const {
  std::vector<int> members{identity()};
  std::vector<char> seen(elems_.size(), 0);
  seen[identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (int i : theta.indices(rs_->rank())) {
      const int nxt = compose(members[head], gens_[i]);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        members.push_back(nxt);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> WeylGroup::parabolic_subgroup(SimpleSubset theta) const {
  std::vector<int> members = subgroup_closure(theta);
  // Cross-check against the pointwise stabilizer of a_theta.
  const Subsystem sub = rs_->subsystem(theta);
  std::vector<char> member_mask(elems_.size(), 0);
  for (int m : members) member_mask[m] = 1;
  for (std::size_t w = 0; w < elems_.size(); ++w) {
    bool fixes = true;
    for (const auto& b : sub.orthocomplement_basis)
      if (apply(static_cast<int>(w), b) != b) {
        fixes = false;
        break;
      }
    if (fixes != static_cast<bool>(member_mask[w]))
      throw std::logic_error("W_theta differs from the pointwise stabilizer of a_theta");
  }
  return members;
}

std::vector<int> WeylGroup::stabilizer_of(const SplitElement& h) const {
  const RatVec amb = rs_->ambient_of(h);
  std::vector<int> stab;
  for (std::size_t w = 0; w < elems_.size(); ++w)
    if (apply(static_cast<int>(w), amb) == amb) stab.push_back(static_cast<int>(w));
  const std::vector<int> para = subgroup_closure(rs_->theta_of(h));
  if (stab != para) throw std::logic_error("W_H != W_{Theta(H)}");
  return stab;
}

std::vector<int> WeylGroup::coset_reps(SimpleSubset theta) const {
  std::vector<int> reps;
  for (std::size_t w = 0; w < elems_.size(); ++w) {
    bool minimal = true;
    for (int i : theta.indices(rs_->rank()))
      if (!rs_->is_positive_root(elems_[w].perm[rs_->simple_indices()[i]])) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(static_cast<int>(w));
  }
  const std::size_t sub_order = subgroup_closure(theta).size();
  if (reps.size() * sub_order != order())
    throw std::logic_error("coset representative count mismatch");
  return reps;
}

DoubleCosetTable WeylGroup::double_cosets(SimpleSubset delta, SimpleSubset theta) const {
  DoubleCosetTable table;
  table.left = delta;
  table.right = theta;
  const std::size_t n = order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t w = 0; w < n; ++w) {
    for (int i : delta.indices(rs_->rank())) unite(static_cast<int>(w), compose(gens_[i], static_cast<int>(w)));
    for (int i : theta.indices(rs_->rank())) unite(static_cast<int>(w), compose(static_cast<int>(w), gens_[i]));
  }
  // Elements are sorted by (length, word), so the class root is the
  // minimal-length candidate; assert it is the strict minimum.
  std::vector<int> root_to_coset(n, -1);
  for (std::size_t w = 0; w < n; ++w) {
    const int r = find(static_cast<int>(w));
    if (root_to_coset[r] < 0) {
      root_to_coset[r] = table.count();
      table.reps.push_back(r);
      table.sizes.push_back(0);
    }
  }
  table.membership.resize(n);
  std::vector<int> second_min_len(table.count(), -1);
  for (std::size_t w = 0; w < n; ++w) {
    const int c = root_to_coset[find(static_cast<int>(w))];
    table.membership[w] = c;
    table.sizes[c]++;
    if (static_cast<int>(w) != table.reps[c] &&
        (second_min_len[c] < 0 || elems_[w].length < second_min_len[c]))
      second_min_len[c] = elems_[w].length;
  }
  for (int c = 0; c < table.count(); ++c)
    if (second_min_len[c] >= 0 && second_min_len[c] <= elems_[table.reps[c]].length)
      throw std::logic_error("double coset has no strict minimal-length representative");
  return table;
}

}  // namespace bruhatkit
