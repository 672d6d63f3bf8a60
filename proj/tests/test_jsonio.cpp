// test_jsonio.cpp
// ---------------
// Serialization: grid posets and lattices to JSON (and back, for posets),
// Graphviz DOT rendering, character and rank-polynomial JSON shapes, the
// hex encoding of element masks, and report serialization.
#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <tuple>

#include "weylgrid/bitmask.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/gridposet.hpp"
#include "weylgrid/ideallattice.hpp"
#include "weylgrid/jsonio.hpp"

namespace {

using namespace weylgrid;

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("mask hex encoding round-trips", "[jsonio][bitmask]") {
  CHECK(Mask128::empty_set().to_hex() == "0");
  Mask128 m;
  m.set(0);
  CHECK(m.to_hex() == "1");
  m.set(1);
  m.set(2);
  m.set(3);
  CHECK(m.to_hex() == "f");
  Mask128 high;
  high.set(100);
  const std::string h = high.to_hex();
  CHECK(h.size() == 26);  // 2^100 in hex: 1 followed by 25 zeros
  CHECK(Mask128::from_hex(h) == high);
  CHECK(Mask128::from_hex("f") == m);
  CHECK(Mask128::from_hex("0") == Mask128::empty_set());
  CHECK_THROWS_AS(Mask128::from_hex(""), std::invalid_argument);
  CHECK_THROWS_AS(Mask128::from_hex("zz"), std::invalid_argument);

  // Round trip across a real lattice's elements.
  const ColoredLattice l = ColoredLattice::enumerate(semistandard_poset(
      RootSystemId::C2, {1, 1}, FundamentalOrder::beta_alpha));
  for (int e = 0; e < l.size(); ++e)
    CHECK(Mask128::from_hex(l.element(e).to_hex()) == l.element(e));
}

TEST_CASE("poset JSON round-trips exactly", "[jsonio]") {
  const GridPoset p = semistandard_poset(RootSystemId::G2, {1, 1},
                                         FundamentalOrder::alpha_beta);
  const OrderedJson j = poset_to_json(p);
  REQUIRE(j.contains("vertices"));
  CHECK(j["vertices"].size() == static_cast<std::size_t>(p.size()));

  const GridPoset q = poset_from_json(j);
  REQUIRE(q.size() == p.size());
  std::set<std::tuple<std::int64_t, std::int64_t, Color>> a, b;
  for (const GridVertex& v : p.vertices()) a.insert({v.x, v.y, v.color});
  for (const GridVertex& v : q.vertices()) b.insert({v.x, v.y, v.color});
  CHECK(a == b);
  // Derived structure is rebuilt identically.
  CHECK(q.chain_count() == p.chain_count());
  CHECK(q.cover_edges() == p.cover_edges());

  CHECK_THROWS_AS(poset_from_json(OrderedJson{{"foo", 1}}),
                  std::invalid_argument);
}

TEST_CASE("lattice JSON carries hex elements and colored covers",
          "[jsonio]") {
  const ColoredLattice l = ColoredLattice::enumerate(semistandard_poset(
      RootSystemId::A1xA1, {1, 0}, FundamentalOrder::beta_alpha));
  const OrderedJson j = lattice_to_json(l);
  REQUIRE(j["elements"].size() == 2);
  CHECK(j["elements"][0] == "0");
  CHECK(j["elements"][1] == "1");
  REQUIRE(j["covers"].size() == 1);
  CHECK(j["covers"][0][0] == 0);
  CHECK(j["covers"][0][1] == 1);
  CHECK(j["covers"][0][2] == "alpha");

  // Compact dump is stable and newline-free.
  const std::string s = j.dump();
  CHECK(s == R"({"elements":["0","1"],"covers":[[0,1,"alpha"]]})");
}

TEST_CASE("DOT rendering shows ranks bottom-up with styled cover colors",
          "[jsonio]") {
  const ColoredLattice l = ColoredLattice::enumerate(semistandard_poset(
      RootSystemId::A2, {1, 0}, FundamentalOrder::beta_alpha));
  const std::string dot = lattice_to_dot(l);
  CHECK(contains(dot, "digraph lattice"));
  CHECK(contains(dot, "rankdir=BT"));
  CHECK(contains(dot, "[label=\"alpha\", color=blue]"));
  CHECK(contains(dot, "[label=\"beta\", color=red, style=dashed]"));
  CHECK(!contains(dot, "wt="));

  const std::string with_w = lattice_to_dot(l, true);
  CHECK(contains(with_w, "wt="));
  // One node line per element, one edge line per cover.
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = with_w.find("label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = with_w.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == static_cast<std::size_t>(l.size()) + l.covers().size());
  CHECK(edges == l.covers().size());
}

TEST_CASE("character JSON: frozen small case", "[jsonio]") {
  const OrderedJson j = character_to_json(RootSystemId::A2, {1, 0});
  CHECK(j["system"] == "A2");
  CHECK(j["lambda"] == OrderedJson({1, 0}));
  CHECK(j["dimension"] == 3);
  REQUIRE(j["terms"].size() == 3);
  // Leading term first: the target weight with coefficient one.
  CHECK(j["terms"][0]["weight"] == OrderedJson({1, 0}));
  CHECK(j["terms"][0]["coeff"] == 1);
  for (const auto& t : j["terms"]) CHECK(t["coeff"] == 1);
}

TEST_CASE("rank polynomial JSON: frozen small case", "[jsonio]") {
  const OrderedJson j = rgf_to_json(RootSystemId::A1xA1, {1, 0});
  CHECK(j["system"] == "A1xA1");
  CHECK(j["lambda"] == OrderedJson({1, 0}));
  CHECK(j["coefficients"] == OrderedJson({1, 1}));
  CHECK(j["factored"].get<std::string>().find("1-q") != std::string::npos);
}

TEST_CASE("report JSON carries witnesses", "[jsonio]") {
  Report r;
  r.add("alpha_check");
  auto& failing = r.add("beta_check");
  Report::fail(failing, "first witness");
  Report::fail(failing, "second witness");

  const OrderedJson j = report_to_json(r);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "alpha_check");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][0]["witnesses"].empty());
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j["checks"][1]["witnesses"].size() == 2);
  CHECK(j["checks"][1]["witnesses"][0] == "first witness");
}
