#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bruhatkit/bruhat.hpp"

#include <map>
#include <set>

using namespace bruhatkit;

TEST_CASE("canonical H_theta has zeros exactly on theta") {
  const auto rs = RootSystem::build(Series::B, 3);
  for (std::uint32_t b = 0; b < 8; ++b) {
    const SimpleSubset theta(b);
    const auto h = canonical_h_theta(rs, theta);
    CHECK(h.chamber_closure_flag);
    CHECK(rs.theta_of(h) == theta);
  }
}

TEST_CASE("flag manifold dimensions over the positive-root count") {
  const auto a2 = RootSystem::build(Series::A, 2);
  CHECK(flag_dim(a2, SimpleSubset()) == 3);
  CHECK(flag_dim(a2, SimpleSubset::of({0})) == 2);
  CHECK(flag_dim(a2, SimpleSubset::full(2)) == 0);
  const auto a3 = RootSystem::build(Series::A, 3);
  CHECK(flag_dim(a3, SimpleSubset()) == 6);
  CHECK(flag_dim(a3, SimpleSubset::of({1})) == 5);
  const auto b2 = RootSystem::build(Series::B, 2);
  CHECK(flag_dim(b2, SimpleSubset()) == 4);
}

TEST_CASE("fixed component, A2 with X on the alpha2 wall") {
  const auto rs = RootSystem::build(Series::A, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto x = rs.split_element({Rat(1), Rat(0)});  // Delta = {alpha2}
  SUBCASE("identity representative") {
    const auto fc = fixed_component(rs, weyl, x, SimpleSubset(), weyl.identity());
    CHECK(fc.delta == SimpleSubset::of({1}));
    CHECK(fc.dim == 1);
    CHECK(fc.flag_type.theta == SimpleSubset());
    CHECK(fc.chamber_signs == std::vector<int>{1});
  }
  SUBCASE("longest representative lands in the opposite chamber") {
    const auto fc = fixed_component(rs, weyl, x, SimpleSubset(), weyl.longest_element());
    CHECK(fc.dim == 1);
    CHECK(fc.chamber_signs == std::vector<int>{-1});
  }
}

TEST_CASE("fixed component for regular X is a point") {
  const auto rs = RootSystem::build(Series::B, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto x = rs.split_element({Rat(1), Rat(1)});
  for (int w = 0; w < static_cast<int>(weyl.order()); ++w) {
    const auto fc = fixed_component(rs, weyl, x, SimpleSubset(), w);
    CHECK(fc.delta == SimpleSubset());
    CHECK(fc.dim == 0);
    CHECK(fc.chamber_signs.empty());
  }
}

TEST_CASE("X = 0 collapses everything to one full-flag component") {
  const auto rs = RootSystem::build(Series::A, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto gd = generalized_decomposition(rs, weyl, rs.split_element({Rat(0), Rat(0)}),
                                            SimpleSubset());
  CHECK(gd.cells.size() == 1);
  CHECK(gd.cells[0].component.dim == flag_dim(rs, SimpleSubset()));
  CHECK(gd.cells[0].unstable_dim == 0);
  CHECK(gd.cells[0].total_dim == 3);
}

TEST_CASE("chamber-restriction inclusion holds for every chamber, exhaustive A3") {
  const auto rs = RootSystem::build(Series::A, 3);
  const auto weyl = WeylGroup::generate(rs);
  for (std::uint32_t b = 0; b < 8; ++b)
    for (int w = 0; w < static_cast<int>(weyl.order()); ++w)
      CHECK(lemma3_inclusion(rs, weyl, SimpleSubset(b), w));
}

TEST_CASE("chamber-restriction inclusion, exhaustive B3 and G2") {
  for (const auto& [s, n] :
       std::vector<std::pair<Series, int>>{{Series::B, 3}, {Series::G, 2}}) {
    const auto rs = RootSystem::build(s, n);
    const auto weyl = WeylGroup::generate(rs);
    for (std::uint32_t b = 0; b < (1u << n); ++b)
      for (int w = 0; w < static_cast<int>(weyl.order()); ++w)
        CHECK(lemma3_inclusion(rs, weyl, SimpleSubset(b), w));
  }
}

TEST_CASE("regular H, empty theta: one cell per Weyl element, cell dim = length") {
  const auto rs = RootSystem::build(Series::B, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto gd = regular_bruhat(rs, weyl, SimpleSubset());
  REQUIRE(gd.cells.size() == weyl.order());
  for (const auto& cell : gd.cells) {
    CHECK(cell.component.dim == 0);
    CHECK(cell.total_dim == weyl.element(cell.component.coset_rep).length);
  }
}

TEST_CASE("regular H over the A2 partial flag gives cells of dimension 0,1,2") {
  const auto rs = RootSystem::build(Series::A, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto gd = regular_bruhat(rs, weyl, SimpleSubset::of({0}));
  REQUIRE(gd.cells.size() == 3);
  std::multiset<int> dims;
  for (const auto& cell : gd.cells) dims.insert(cell.total_dim);
  CHECK(dims == std::multiset<int>{0, 1, 2});
}

TEST_CASE("regular A3 cell-dimension histogram matches the length generating function") {
  const auto rs = RootSystem::build(Series::A, 3);
  const auto weyl = WeylGroup::generate(rs);
  const auto gd = regular_bruhat(rs, weyl, SimpleSubset());
  std::map<int, int> hist;
  for (const auto& cell : gd.cells) hist[cell.total_dim]++;
  // coefficients of (1)(1+q)(1+q+q^2)(1+q+q^2+q^3)
  const std::map<int, int> expect = {{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}};
  CHECK(hist == expect);
}

TEST_CASE("A2 with X on a wall: three cells with totals 1,2,3 and one open cell") {
  const auto rs = RootSystem::build(Series::A, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto gd = generalized_decomposition(rs, weyl, rs.split_element({Rat(1), Rat(0)}),
                                            SimpleSubset());
  REQUIRE(gd.cells.size() == 3);
  std::multiset<int> totals, fixes;
  for (const auto& cell : gd.cells) {
    totals.insert(cell.total_dim);
    fixes.insert(cell.component.dim);
  }
  CHECK(totals == std::multiset<int>{1, 2, 3});
  CHECK(fixes == std::multiset<int>{1, 1, 1});
}

TEST_CASE("exactly one open cell of full dimension, several systems") {
  for (const auto& [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::B, 3}, {Series::G, 2}, {Series::D, 4}}) {
    const auto rs = RootSystem::build(s, n);
    const auto weyl = WeylGroup::generate(rs);
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      const SimpleSubset theta(b);
      const auto gd = regular_bruhat(rs, weyl, theta);
      int open = 0;
      for (const auto& cell : gd.cells) {
        CHECK(cell.total_dim <= flag_dim(rs, theta));
        if (cell.total_dim == flag_dim(rs, theta)) ++open;
      }
      CHECK(open == 1);
    }
  }
}

TEST_CASE("flag type and dimension are invariant along a double coset") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto weyl = WeylGroup::generate(rs);
  const auto x = rs.split_element({Rat(0), Rat(1), Rat(0)});
  const SimpleSubset theta = SimpleSubset::of({0});
  const auto table = weyl.double_cosets(rs.theta_of(x), theta);
  std::vector<FixedComponent> by_coset;
  for (int rep : table.reps) by_coset.push_back(fixed_component(rs, weyl, x, theta, rep));
  for (int w = 0; w < static_cast<int>(weyl.order()); ++w) {
    const auto fc = fixed_component(rs, weyl, x, theta, w);
    const auto& ref = by_coset[table.coset_of(w)];
    CHECK(fc.flag_type.theta == ref.flag_type.theta);
    CHECK(fc.dim == ref.dim);
  }
}

TEST_CASE("component data does not depend on the choice of H_theta") {
  const auto rs = RootSystem::build(Series::A, 3);
  const auto weyl = WeylGroup::generate(rs);
  const auto x = rs.split_element({Rat(0), Rat(2), Rat(0)});
  const SimpleSubset theta = SimpleSubset::of({1});
  const auto h1 = canonical_h_theta(rs, theta);
  const auto h2 = rs.split_element({Rat(3), Rat(0), Rat(1)});  // same annihilator
  REQUIRE(rs.theta_of(h2) == theta);
  for (int w = 0; w < static_cast<int>(weyl.order()); ++w) {
    const auto a = fixed_component_with(rs, weyl, x, h1, w);
    const auto b = fixed_component_with(rs, weyl, x, h2, w);
    CHECK(a.flag_type.theta == b.flag_type.theta);
    CHECK(a.dim == b.dim);
    CHECK(a.chamber_signs == b.chamber_signs);
  }
}

TEST_CASE("disjointness witness tracks double-coset membership") {
  const auto rs = RootSystem::build(Series::A, 2);
  const auto weyl = WeylGroup::generate(rs);
  const auto x = rs.split_element({Rat(1), Rat(0)});  // Delta = {alpha2}
  const int s1 = weyl.generator(0), s2 = weyl.generator(1);
  CHECK(disjointness_witness(rs, weyl, x, SimpleSubset(), weyl.identity(), s2));
  CHECK(!disjointness_witness(rs, weyl, x, SimpleSubset(), weyl.identity(), s1));
  CHECK(disjointness_witness(rs, weyl, x, SimpleSubset(), s1, s1));
}

TEST_CASE("unstable dimension of a minimal representative equals its length") {
  for (const auto& [s, n] :
       std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::C, 3}, {Series::G, 2}}) {
    const auto rs = RootSystem::build(s, n);
    const auto weyl = WeylGroup::generate(rs);
    const RatVec h_reg = rs.regular_probe(0);
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      const SimpleSubset theta(b);
      for (int rep : weyl.double_cosets(SimpleSubset(), theta).reps)
        CHECK(unstable_dim(rs, weyl, h_reg, theta, rep) == weyl.element(rep).length);
    }
  }
}

TEST_CASE("cell totals are invariant under a different regular H") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto weyl = WeylGroup::generate(rs);
  const SimpleSubset theta = SimpleSubset::of({1});
  const auto gd1 = generalized_decomposition(rs, weyl, rs.split_element({Rat(1), Rat(1), Rat(1)}),
                                             theta);
  const auto gd2 = generalized_decomposition(rs, weyl, rs.split_element({Rat(2), Rat(5), Rat(1)}),
                                             theta);
  REQUIRE(gd1.cells.size() == gd2.cells.size());
  for (std::size_t i = 0; i < gd1.cells.size(); ++i) {
    CHECK(gd1.cells[i].component.coset_rep == gd2.cells[i].component.coset_rep);
    CHECK(gd1.cells[i].total_dim == gd2.cells[i].total_dim);
  }
}
