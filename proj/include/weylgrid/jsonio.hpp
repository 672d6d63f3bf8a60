// jsonio.hpp
// ----------
// JSON and Graphviz renderings of every public artifact: grid posets (vertex
// lists; covers and chains are always recomputed on load), colored lattices
// (hex element masks + colored cover triples), characters, rank generating
// functions, check reports, and verification verdicts.  All emitters use
// nlohmann's ordered_json so identical inputs yield byte-identical output.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylgrid/coloring.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/gridposet.hpp"
#include "weylgrid/groupring.hpp"
#include "weylgrid/ideallattice.hpp"
#include "weylgrid/qseries.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

using OrderedJson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Grid posets
// ---------------------------------------------------------------------------

inline OrderedJson poset_to_json(const GridPoset& p) {
  OrderedJson verts = OrderedJson::array();
  for (const GridVertex& v : p.vertices())
    verts.push_back(
        {{"x", v.x}, {"y", v.y}, {"color", to_string(v.color)}});
  return {{"vertices", verts}};
}

inline GridPoset poset_from_json(const OrderedJson& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("weylgrid: poset JSON lacks a vertices array");
  std::vector<GridVertex> vs;
  for (const auto& e : j["vertices"])
    vs.push_back({e.at("x").get<std::int64_t>(), e.at("y").get<std::int64_t>(),
                  color_from_string(e.at("color").get<std::string>())});
  return GridPoset(std::move(vs));
}

// ---------------------------------------------------------------------------
// Lattices
// ---------------------------------------------------------------------------

inline OrderedJson lattice_to_json(const ColoredLattice& l) {
  OrderedJson elements = OrderedJson::array();
  for (int e = 0; e < l.size(); ++e) elements.push_back(l.element(e).to_hex());
  OrderedJson covers = OrderedJson::array();
  for (const ColoredCover& c : l.covers())
    covers.push_back({c.from, c.to, to_string(c.color)});
  return {{"elements", elements}, {"covers", covers}};
}

// Graphviz rendering of the Hasse diagram, bottom to top; the two cover
// colors use visually distinct styles and carry their name as edge label.
inline std::string lattice_to_dot(const ColoredLattice& l,
                                  bool with_weights = false) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int e = 0; e < l.size(); ++e) {
    out += "  n" + std::to_string(e) + " [label=\"" + l.element(e).to_hex();
    if (with_weights) {
      const Weight w = l.weight(e);
      out += "\\nwt=" + w.str();
    }
    out += "\"];\n";
  }
  for (const ColoredCover& c : l.covers()) {
    out += "  n" + std::to_string(c.from) + " -> n" + std::to_string(c.to);
    if (c.color == Color::alpha)
      out += " [label=\"alpha\", color=blue];\n";
    else
      out += " [label=\"beta\", color=red, style=dashed];\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Characters and rank generating functions
// ---------------------------------------------------------------------------

inline OrderedJson character_to_json(RootSystemId s, const Lambda2& lam) {
  const GroupRingElement& chi = weyl_character(s, lam);
  // Terms from the leading weight downward in the division term order.
  std::vector<std::pair<Weight, std::int64_t>> terms(chi.terms.begin(),
                                                     chi.terms.end());
  std::sort(terms.begin(), terms.end(),
            [s](const auto& x, const auto& y) {
              return term_order_less(s, y.first, x.first);
            });
  OrderedJson jt = OrderedJson::array();
  for (const auto& [w, c] : terms)
    jt.push_back({{"weight", {w.a, w.b}}, {"coeff", c}});
  return {{"system", to_string(s)},
          {"lambda", {lam.a, lam.b}},
          {"dimension", chi.evaluate_at_one()},
          {"terms", jt}};
}

inline OrderedJson rgf_to_json(RootSystemId s, const Lambda2& lam) {
  const QPolynomial p = closed_form_rgf(s, lam);
  return {{"system", to_string(s)},
          {"lambda", {lam.a, lam.b}},
          {"coefficients", p.coefficients},
          {"factored", closed_form_rgf_factored(s, lam)}};
}

// ---------------------------------------------------------------------------
// Reports and verdicts
// ---------------------------------------------------------------------------

inline OrderedJson report_to_json(const Report& r) {
  OrderedJson checks = OrderedJson::array();
  for (const Check& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  return {{"checks", checks}};
}

}  // namespace weylgrid
