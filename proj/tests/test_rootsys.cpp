// test_rootsys.cpp
// ----------------
// Root-system data for the four rank-two types: Cartan matrices, simple
// reflections, the Weyl group (checked against an independent in-test
// closure), positive coroot pairings, and the character dimension formula.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "weylgrid/core.hpp"
#include "weylgrid/rootsys.hpp"

namespace {

using namespace weylgrid;

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

// Reflection matrices rebuilt from scratch (column action on weights):
// s_c(e_j) read off from s_c(mu) = mu - mu_c * alpha_c.
Mat2 reflection_from_cartan(RootSystemId s, Color c) {
  const Weight col0 = simple_reflection(s, c, Weight{1, 0});
  const Weight col1 = simple_reflection(s, c, Weight{0, 1});
  return {{{col0.a, col1.a}, {col0.b, col1.b}}};
}

// Independent group closure: repeatedly multiply by the two generators until
// nothing new appears.
std::set<Mat2> closure_oracle(RootSystemId s) {
  const Mat2 ra = reflection_from_cartan(s, Color::alpha);
  const Mat2 rb = reflection_from_cartan(s, Color::beta);
  std::set<Mat2> seen{Mat2{{{1, 0}, {0, 1}}}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Mat2& m : std::vector<Mat2>(seen.begin(), seen.end()))
      for (const Mat2& g : {ra, rb})
        if (seen.insert(mul(g, m)).second) changed = true;
    REQUIRE(seen.size() <= 12);
  }
  return seen;
}

}  // namespace

TEST_CASE("Cartan matrices are the four rank-two types", "[rootsys]") {
  CHECK(simple_root(RootSystemId::A1xA1, Color::alpha) == Weight{2, 0});
  CHECK(simple_root(RootSystemId::A1xA1, Color::beta) == Weight{0, 2});
  CHECK(simple_root(RootSystemId::A2, Color::alpha) == Weight{2, -1});
  CHECK(simple_root(RootSystemId::A2, Color::beta) == Weight{-1, 2});
  CHECK(simple_root(RootSystemId::C2, Color::alpha) == Weight{2, -1});
  CHECK(simple_root(RootSystemId::C2, Color::beta) == Weight{-2, 2});
  CHECK(simple_root(RootSystemId::G2, Color::alpha) == Weight{2, -1});
  CHECK(simple_root(RootSystemId::G2, Color::beta) == Weight{-3, 2});

  // Determinants 4, 3, 2, 1 — pairwise distinct, so the four types really
  // are different.
  CHECK(cartan_matrix(RootSystemId::A1xA1).det() == 4);
  CHECK(cartan_matrix(RootSystemId::A2).det() == 3);
  CHECK(cartan_matrix(RootSystemId::C2).det() == 2);
  CHECK(cartan_matrix(RootSystemId::G2).det() == 1);

  CHECK(rho() == Weight{1, 1});
}

TEST_CASE("simple reflections act as expected on sample weights",
          "[rootsys]") {
  // s_alpha fixes weights with zero alpha-coordinate, and vice versa.
  CHECK(simple_reflection(RootSystemId::A2, Color::alpha, {0, 5}) ==
        Weight{0, 5});
  CHECK(simple_reflection(RootSystemId::A2, Color::beta, {7, 0}) ==
        Weight{7, 0});

  CHECK(simple_reflection(RootSystemId::A2, Color::alpha, {1, 0}) ==
        Weight{-1, 1});
  CHECK(simple_reflection(RootSystemId::C2, Color::beta, {0, 1}) ==
        Weight{2, -1});
  CHECK(simple_reflection(RootSystemId::G2, Color::beta, {0, 1}) ==
        Weight{3, -1});

  // Involutions.
  for (const RootSystemId s : kAllSystems)
    for (const Color c : {Color::alpha, Color::beta}) {
      const Weight mu{3, -2};
      CHECK(simple_reflection(s, c, simple_reflection(s, c, mu)) == mu);
    }
}

TEST_CASE("Weyl groups have the right orders and match a closure oracle",
          "[rootsys]") {
  const std::map<RootSystemId, std::size_t> expected_order{
      {RootSystemId::A1xA1, 4},
      {RootSystemId::A2, 6},
      {RootSystemId::C2, 8},
      {RootSystemId::G2, 12}};

  for (const RootSystemId s : kAllSystems) {
    const auto& w = weyl_group(s);
    CHECK(w.size() == expected_order.at(s));

    std::set<Mat2> actions;
    for (const WeylGroupElement& e : w) actions.insert(e.action);
    CHECK(actions.size() == w.size());  // all distinct
    CHECK(actions == closure_oracle(s));
  }
}

TEST_CASE("Weyl element lengths and determinants are consistent",
          "[rootsys]") {
  const std::map<RootSystemId, int> longest{{RootSystemId::A1xA1, 2},
                                            {RootSystemId::A2, 3},
                                            {RootSystemId::C2, 4},
                                            {RootSystemId::G2, 6}};
  for (const RootSystemId s : kAllSystems) {
    int max_len = 0, n_longest = 0, n_identity = 0;
    for (const WeylGroupElement& e : weyl_group(s)) {
      CHECK(e.det == (e.length % 2 == 0 ? 1 : -1));
      const std::int64_t mat_det =
          e.action[0][0] * e.action[1][1] - e.action[0][1] * e.action[1][0];
      CHECK(mat_det == e.det);
      max_len = std::max(max_len, e.length);
      if (e.length == 0) ++n_identity;
    }
    for (const WeylGroupElement& e : weyl_group(s))
      if (e.length == max_len) ++n_longest;
    CHECK(max_len == longest.at(s));
    CHECK(n_longest == 1);  // unique longest element
    CHECK(n_identity == 1);
  }
}

TEST_CASE("positive coroot pairings: counts and values at rho", "[rootsys]") {
  const std::map<RootSystemId, std::vector<std::int64_t>> rho_values{
      {RootSystemId::A1xA1, {1, 1}},
      {RootSystemId::A2, {1, 1, 2}},
      {RootSystemId::C2, {1, 1, 2, 3}},
      {RootSystemId::G2, {1, 1, 2, 3, 4, 5}}};

  for (const RootSystemId s : kAllSystems) {
    const auto& pairings = positive_coroot_pairings(s);
    CHECK(pairings.size() == rho_values.at(s).size());
    CHECK(positive_roots(s).size() == pairings.size());

    std::vector<std::int64_t> at_rho;
    for (const CorootPairing& p : pairings) at_rho.push_back(p(rho()));
    std::sort(at_rho.begin(), at_rho.end());
    CHECK(at_rho == rho_values.at(s));

    // Every pairing is strictly positive on strictly dominant weights.
    for (const CorootPairing& p : pairings) CHECK(p(Weight{1, 1}) > 0);

    // The two simple coroot pairings (coordinate projections) are present.
    CHECK(std::count(pairings.begin(), pairings.end(),
                     CorootPairing{1, 0}) == 1);
    CHECK(std::count(pairings.begin(), pairings.end(),
                     CorootPairing{0, 1}) == 1);
  }
}

TEST_CASE("pairings transported by the Weyl group stay in the root system",
          "[rootsys]") {
  for (const RootSystemId s : kAllSystems) {
    const auto& pairings = positive_coroot_pairings(s);
    std::set<std::pair<std::int64_t, std::int64_t>> all;
    for (const CorootPairing& p : pairings) {
      all.insert({p.ca, p.cb});
      all.insert({-p.ca, -p.cb});
    }
    // mu |-> p(w(mu)) is linear with coefficients (p . column of w); it must
    // be one of the +-pairings again.
    for (const CorootPairing& p : pairings)
      for (const WeylGroupElement& w : weyl_group(s)) {
        const std::int64_t ca =
            p.ca * w.action[0][0] + p.cb * w.action[1][0];
        const std::int64_t cb =
            p.ca * w.action[0][1] + p.cb * w.action[1][1];
        CHECK(all.contains({ca, cb}));
      }
  }
}

TEST_CASE("height at lambda+rho matches the closed-form exponent table",
          "[rootsys]") {
  for (const RootSystemId s : kAllSystems) {
    const RgfExponents table = closed_form_rgf_exponents(s);
    const auto& pairings = positive_coroot_pairings(s);
    REQUIRE(table.numerator.size() == pairings.size());
    REQUIRE(table.denominator.size() == pairings.size());

    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const Lambda2 lam(a, b);
        const Weight shifted = lam.to_weight() + rho();

        std::vector<std::int64_t> generic, tabled;
        for (const CorootPairing& p : pairings)
          generic.push_back(p(shifted));
        for (const LinearForm& f : table.numerator) tabled.push_back(f(lam));
        std::sort(generic.begin(), generic.end());
        std::sort(tabled.begin(), tabled.end());
        CHECK(generic == tabled);
      }

    std::vector<std::int64_t> at_rho;
    for (const CorootPairing& p : pairings) at_rho.push_back(p(rho()));
    std::sort(at_rho.begin(), at_rho.end());
    CHECK(std::vector<std::int64_t>(table.denominator.begin(),
                                    table.denominator.end()) == at_rho);
  }
}

TEST_CASE("height2 sums the coroot pairings", "[rootsys]") {
  CHECK(height2(RootSystemId::A1xA1, rho()) == 2);
  CHECK(height2(RootSystemId::A2, rho()) == 4);
  CHECK(height2(RootSystemId::C2, rho()) == 7);
  // Sum of the rho-pairing multiset {1,1,2,3,4,5}.
  CHECK(height2(RootSystemId::G2, rho()) == 16);
  CHECK(height2(RootSystemId::A2, Weight{0, 0}) == 0);
  // Linear in the weight.
  CHECK(height2(RootSystemId::G2, Weight{2, 3}) ==
        2 * height2(RootSystemId::G2, Weight{1, 0}) +
            3 * height2(RootSystemId::G2, Weight{0, 1}));
}

TEST_CASE("character dimension spot values", "[rootsys]") {
  CHECK(character_dimension(RootSystemId::A1xA1, {0, 0}) == 1);
  CHECK(character_dimension(RootSystemId::A2, {1, 0}) == 3);
  CHECK(character_dimension(RootSystemId::A2, {0, 1}) == 3);
  CHECK(character_dimension(RootSystemId::A2, {1, 1}) == 8);
  CHECK(character_dimension(RootSystemId::C2, {1, 0}) == 4);
  CHECK(character_dimension(RootSystemId::C2, {0, 1}) == 5);
  CHECK(character_dimension(RootSystemId::C2, {2, 0}) == 10);
  CHECK(character_dimension(RootSystemId::G2, {1, 0}) == 7);
  CHECK(character_dimension(RootSystemId::G2, {0, 1}) == 14);

  CHECK(character_dimension(RootSystemId::A1xA1, {2, 2}) == 9);
  CHECK(character_dimension(RootSystemId::A2, {2, 2}) == 27);
  CHECK(character_dimension(RootSystemId::C2, {2, 2}) == 81);
  CHECK(character_dimension(RootSystemId::G2, {2, 2}) == 729);
  CHECK(character_dimension(RootSystemId::G2, {3, 3}) == 4096);

  // Symmetry of the A1xA1 and A2 diagrams.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      CHECK(character_dimension(RootSystemId::A1xA1, {a, b}) ==
            (a + 1) * (b + 1));
      CHECK(character_dimension(RootSystemId::A2, {a, b}) ==
            character_dimension(RootSystemId::A2, {b, a}));
    }
}

TEST_CASE("lambda coordinates must be nonnegative", "[rootsys]") {
  CHECK_THROWS_AS(Lambda2(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Lambda2(0, -3), std::invalid_argument);
}
