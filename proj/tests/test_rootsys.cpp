#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bruhatkit/rootsys.hpp"
#include "bruhatkit/json_io.hpp"
#include "oracles.hpp"

#include <set>

using namespace bruhatkit;

namespace {

std::set<std::string> key_set(const std::vector<RatVec>& vs) {
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(vec_key(v));
  return s;
}

std::vector<RatVec> simple_vectors(const RootSystem& rs) {
  std::vector<RatVec> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(rs.simple_root(i));
  return out;
}

int expected_root_count(Series s, int n) {
  switch (s) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::G: return 12;
    case Series::F: return 48;
    case Series::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
  }
  return -1;
}

}  // namespace

TEST_CASE("A1 has two roots and one simple root") {
  const auto rs = RootSystem::build(Series::A, 1);
  CHECK(rs.root_count() == 2);
  CHECK(rs.simple_indices().size() == 1);
  CHECK(rs.positive_indices().size() == 1);
  const RatVec a1 = rs.simple_root(0);
  CHECK(dot(a1, a1) == Rat(2));
}

TEST_CASE("A2 root list matches the hand enumeration") {
  const auto rs = RootSystem::build(Series::A, 2);
  CHECK(rs.root_count() == 6);
  CHECK(rs.positive_indices().size() == 3);
  // e_i - e_j realization in ambient dimension 3
  CHECK(rs.ambient_dim() == 3);
  const RatVec a1 = rs.simple_root(0), a2 = rs.simple_root(1);
  CHECK(dot(a1, a1) == Rat(2));
  CHECK(dot(a1, a2) == Rat(-1));
  // the third positive root is alpha1 + alpha2
  const int hi = rs.root_index(add(a1, a2));
  CHECK(hi >= 0);
  CHECK(rs.is_positive_root(hi));
}

TEST_CASE("G2 matches the reflection-closure oracle") {
  const auto rs = RootSystem::build(Series::G, 2);
  CHECK(rs.root_count() == 12);
  const auto oracle = oracles::root_closure(simple_vectors(rs));
  CHECK(oracle.size() == 12);
  CHECK(key_set(oracle) == key_set(rs.roots()));
}

TEST_CASE("root counts match the classical formulas, all supported systems") {
  const std::vector<std::pair<Series, std::vector<int>>> table = {
      {Series::A, {1, 2, 3, 4, 5}}, {Series::B, {2, 3, 4}}, {Series::C, {2, 3, 4}},
      {Series::D, {3, 4}},          {Series::G, {2}},       {Series::F, {4}},
      {Series::E, {6, 7, 8}}};
  for (const auto& [s, ranks] : table)
    for (int n : ranks) {
      const auto rs = RootSystem::build(s, n);
      CAPTURE(rs.label());
      CHECK(rs.root_count() == expected_root_count(s, n));
      CHECK(static_cast<int>(rs.positive_indices().size()) * 2 == rs.root_count());
    }
}

TEST_CASE("closure oracle agrees for every rank <= 4 system") {
  const std::vector<std::pair<Series, int>> systems = {
      {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2}, {Series::B, 3},
      {Series::B, 4}, {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::F, 4}};
  for (const auto& [s, n] : systems) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs.label());
    CHECK(key_set(oracles::root_closure(simple_vectors(rs))) == key_set(rs.roots()));
  }
}

TEST_CASE("invalid series/rank combinations throw") {
  CHECK_THROWS_AS(RootSystem::build(Series::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Series::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Series::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Series::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Series::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Series::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(series_from_char('X'), std::invalid_argument);
}

TEST_CASE("simple_coords expand each root over the simple basis") {
  for (const auto& [s, n] :
       std::vector<std::pair<Series, int>>{{Series::B, 3}, {Series::G, 2}, {Series::D, 4}}) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs.label());
    for (int r = 0; r < rs.root_count(); ++r) {
      RatVec acc = zero_vec(rs.ambient_dim());
      const auto& c = rs.simple_coords(r);
      bool all_nonneg = true, all_nonpos = true;
      for (int i = 0; i < rs.rank(); ++i) {
        acc = add(acc, scaled(rs.simple_root(i), Rat(c[i])));
        all_nonneg = all_nonneg && c[i] >= 0;
        all_nonpos = all_nonpos && c[i] <= 0;
      }
      CHECK(acc == rs.roots()[r]);
      CHECK((rs.is_positive_root(r) ? all_nonneg : all_nonpos));
    }
  }
}

TEST_CASE("negation map pairs each root with its opposite") {
  const auto rs = RootSystem::build(Series::C, 3);
  for (int r = 0; r < rs.root_count(); ++r) {
    CHECK(rs.roots()[rs.negation_of(r)] == scaled(rs.roots()[r], Rat(-1)));
    CHECK(rs.negation_of(rs.negation_of(r)) == r);
  }
}

TEST_CASE("theta_of reads off the vanishing coweight coordinates") {
  const auto rs = RootSystem::build(Series::A, 3);
  SUBCASE("interior point has empty theta") {
    const auto h = rs.split_element({Rat(1), Rat(2), Rat(1)});
    CHECK(rs.theta_of(h) == SimpleSubset());
  }
  SUBCASE("zeros select the subset") {
    const auto h = rs.split_element({Rat(0), Rat(3), Rat(0)});
    CHECK(rs.theta_of(h) == SimpleSubset::of({0, 2}));
  }
  SUBCASE("origin gives all of Sigma") {
    const auto h = rs.split_element({Rat(0), Rat(0), Rat(0)});
    CHECK(rs.theta_of(h) == SimpleSubset::full(3));
  }
  SUBCASE("outside cl a+ is rejected") {
    const auto h = rs.split_element({Rat(1), Rat(-1), Rat(0)});
    CHECK(!h.chamber_closure_flag);
    CHECK_THROWS_AS(rs.theta_of(h), std::invalid_argument);
  }
}

TEST_CASE("alpha_i applied to a split element is its i-th coweight coordinate") {
  for (const auto& [s, n] :
       std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 3}, {Series::G, 2}}) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs.label());
    RatVec coords;
    for (int i = 0; i < n; ++i) coords.push_back(Rat(i + 1, 2));
    const auto h = rs.split_element(coords);
    const RatVec amb = rs.ambient_of(h);
    for (int i = 0; i < n; ++i) CHECK(dot(rs.simple_root(i), amb) == coords[i]);
  }
}

TEST_CASE("A3 subsystem for the outer pair is A1 x A1") {
  const auto rs = RootSystem::build(Series::A, 3);
  const auto sub = rs.subsystem(SimpleSubset::of({0, 2}));
  CHECK(sub.span_roots.size() == 4);  // +-alpha1, +-alpha3
  CHECK(sub.a_delta_basis.size() == 2);
  CHECK(sub.orthocomplement_basis.size() == 1);
  // a_delta is annihilated by the deleted simple roots
  for (const auto& v : sub.orthocomplement_basis) {
    CHECK(dot(rs.simple_root(0), v) == Rat(0));
    CHECK(dot(rs.simple_root(2), v) == Rat(0));
  }
}

TEST_CASE("B3 subsystem {alpha2, alpha3} closes up to a B2") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto sub = rs.subsystem(SimpleSubset::of({1, 2}));
  CHECK(sub.span_roots.size() == 8);
}

TEST_CASE("pi_theta projection: worked A2 example") {
  const auto rs = RootSystem::build(Series::A, 2);
  // Theta = {alpha1}; project H_alpha2 = alpha2.  The component along
  // alpha1 is dot(a1,a2)/dot(a1,a1) = -1/2.
  const RatVec h = rs.simple_root(1);
  const RatVec p = rs.project_pi_theta(SimpleSubset::of({0}), h);
  CHECK(p == scaled(rs.simple_root(0), Rat(-1, 2)));
}

TEST_CASE("pi_theta is an idempotent self-adjoint projection preserving theta-evaluations") {
  for (const auto& [s, n] :
       std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 3}, {Series::C, 3}}) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs.label());
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const SimpleSubset theta(bits);
      const RatVec h1 = rs.regular_probe(1);
      const RatVec h2 = rs.regular_probe(2);
      const RatVec p1 = rs.project_pi_theta(theta, h1);
      const RatVec p2 = rs.project_pi_theta(theta, h2);
      CHECK(rs.project_pi_theta(theta, p1) == p1);                    // idempotent
      CHECK(dot(p1, h2) == dot(h1, p2));                              // self-adjoint
      for (int i : theta.indices(n))
        CHECK(dot(rs.simple_root(i), p1) == dot(rs.simple_root(i), h1));
      // image is spanned by the theta coroots: the complement coordinates of
      // the residual vanish against theta
      const RatVec res = sub(h1, p1);
      for (int i : theta.indices(n)) CHECK(dot(rs.simple_root(i), res) == Rat(0));
    }
  }
}

TEST_CASE("is_regular and chamber_signs") {
  const auto rs = RootSystem::build(Series::B, 2);
  CHECK(rs.is_regular(rs.regular_probe(0)));
  CHECK(!rs.is_regular(zero_vec(rs.ambient_dim())));
  CHECK(!rs.is_regular(rs.ambient_of(rs.split_element({Rat(1), Rat(0)}))));

  const auto full = rs.subsystem(SimpleSubset::full(2));
  const auto signs = rs.chamber_signs(full, rs.regular_probe(0));
  CHECK(signs == std::vector<int>{1, 1});
  CHECK_THROWS_AS(rs.chamber_signs(full, zero_vec(rs.ambient_dim())), std::invalid_argument);
}

TEST_CASE("orthocomplement decomposition a_theta = a_delta + (a_theta cap k-part)") {
  const auto rs = RootSystem::build(Series::A, 3);
  for (std::uint32_t t = 0; t < 8; ++t)
    for (std::uint32_t d = 0; d < 8; ++d)
      CHECK(rs.orthocomplement_sum_check(SimpleSubset(t), SimpleSubset(d)));
}

TEST_CASE("in_span marks exactly the roots of the theta-subsystem") {
  const auto rs = RootSystem::build(Series::B, 3);
  const SimpleSubset theta = SimpleSubset::of({0, 1});
  const auto sub = rs.subsystem(theta);
  std::set<int> span(sub.span_roots.begin(), sub.span_roots.end());
  for (int r = 0; r < rs.root_count(); ++r)
    CHECK(rs.in_span(r, theta) == (span.count(r) > 0));
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
  for (const auto& [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 4}, {Series::D, 4}, {Series::F, 4}, {Series::E, 6}}) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs.label());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(dot(rs.simple_root(i), rs.fundamental_coweights()[j]) ==
              (i == j ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("split element JSON round trip") {
  const auto rs = RootSystem::build(Series::C, 3);
  const auto h = rs.split_element({Rat(1, 3), Rat(0), Rat(5, 2)});
  const Json j = split_element_json(rs, h);
  const auto back = split_element_from_json(rs, j);
  CHECK(back.coweight_coords == h.coweight_coords);
  CHECK(back.chamber_closure_flag == h.chamber_closure_flag);
  CHECK(j.at("theta") == Json::array({2}));
}

TEST_CASE("root system JSON reports consistent shapes") {
  const auto rs = RootSystem::build(Series::G, 2);
  const Json j = root_system_json(rs);
  CHECK(j.at("series") == "G");
  CHECK(j.at("rank") == 2);
  CHECK(j.at("roots").size() == 12);
  CHECK(j.at("simple_roots").size() == 2);
  CHECK(j.at("positive_roots").size() == 6);
  CHECK(j.at("pairing").size() == 2);
  // the Gram entry dot(a1,a2) for our G2 realization
  CHECK(rat_from_json(j.at("pairing")[0][1]) == dot(rs.simple_root(0), rs.simple_root(1)));
}
