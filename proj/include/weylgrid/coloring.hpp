// coloring.hpp
// ------------
// The vertex-coloring function kappa on the non-maximal lattice elements:
// for an ideal t, take the largest chain index k whose chain is not contained
// in t; v(t) is the top (periphery) vertex of that chain and kappa(t) its
// color.  On top of it, two mechanical verifiers:
//  - verify_subface_partition: inside comp_gamma(t) with gamma = kappa(t),
//    the elements keeping kappa = gamma are exactly the complement of the
//    face {s : v(t) in s} of the chain-product structure;
//  - verify_splitting: the full hypothesis bundle under which the lattice's
//    weight generating function splits into Weyl characters (weight grading,
//    rank-symmetric components, the balanced set and its dominant weights,
//    product-of-chains components, and a set-wise sub-face condition), plus
//    the predicted list of characters.
// The kappa assignment is passed around explicitly so tests can inject a
// corrupted copy and watch the verifiers fail.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weylgrid/bitmask.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/gridposet.hpp"
#include "weylgrid/ideallattice.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

struct KappaAssignment {
  // Per lattice element: the distinguished poset vertex v(t), or -1 where
  // kappa is undefined (exactly the maximal element), and its color.
  std::vector<int> v_of;
  std::vector<Color> kappa;

  bool defined(int e) const {
    return v_of.at(static_cast<std::size_t>(e)) >= 0;
  }
};

// Computes kappa for every non-max element, checking well-formedness on the
// way: v(t) never lies in t, and t together with the whole non-contained
// chain is again an ideal.
inline KappaAssignment compute_kappa(const ColoredLattice& l,
                                     const Deadline& dl = {}) {
  const GridPoset& p = l.poset();
  std::vector<Mask128> chain_masks;
  for (int k = 0; k < p.chain_count(); ++k)
    chain_masks.push_back(p.chain_mask(k));

  KappaAssignment a;
  a.v_of.assign(static_cast<std::size_t>(l.size()), -1);
  a.kappa.assign(static_cast<std::size_t>(l.size()), Color::alpha);
  for (int e = 0; e < l.size(); ++e) {
    dl.poll("kappa computation");
    if (e == l.max_index()) continue;
    const Mask128& t = l.element(e);
    int k = p.chain_count() - 1;
    while (k >= 0 && chain_masks[static_cast<std::size_t>(k)].is_subset_of(t))
      --k;
    if (k < 0)
      throw internal_consistency_error(
          "weylgrid: non-max element contains every chain");
    const int v = p.periphery(k);
    if (t.test(v))
      throw internal_consistency_error(
          "weylgrid: kappa vertex already lies in the ideal");
    if (!p.is_ideal(t | chain_masks[static_cast<std::size_t>(k)]))
      throw internal_consistency_error(
          "weylgrid: ideal plus non-contained chain is not an ideal");
    a.v_of[static_cast<std::size_t>(e)] = v;
    a.kappa[static_cast<std::size_t>(e)] = p.vertex(v).color;
  }
  return a;
}

namespace detail {

// Index of the interval belonging to the gamma-chain containing vertex v:
// intervals are listed per gamma-chain in chain order.
inline int interval_index_for_vertex(const GridPoset& p, Color gamma, int v) {
  int idx = 0;
  for (int k = 0; k < p.chain_count(); ++k) {
    const auto& chain = p.chains()[static_cast<std::size_t>(k)];
    if (p.vertex(chain[0]).color != gamma) continue;
    if (k == p.chain_of(v)) return idx;
    ++idx;
  }
  return -1;
}

}  // namespace detail

// For every non-max t with gamma = kappa(t): v(t) tops its chain interval;
// the face F = {s in comp_gamma(t) : v(t) in s}; and the kappa = gamma part
// of the component (max excluded) is exactly comp \ F.  Report-style, so a
// deliberately corrupted kappa yields witnessed failures instead of throws.
inline Report verify_subface_partition(const ColoredLattice& l,
                                       const KappaAssignment& a,
                                       const Deadline& dl = {}) {
  const GridPoset& p = l.poset();
  Report rep;
  auto& c = rep.add("kappa_subface_partition");
  // The asserted partition depends on the component, the color, and the
  // distinguished vertex (elements of one component may carry different
  // distinguished vertices); verify each such triple once.
  std::set<std::tuple<int, int, int>> done;
  for (int e = 0; e < l.size(); ++e) {
    if (!a.defined(e)) continue;
    const Color gamma = a.kappa[static_cast<std::size_t>(e)];
    const int v = a.v_of[static_cast<std::size_t>(e)];
    const int root = l.component_root(e, gamma);
    if (!done.emplace(root, static_cast<int>(gamma), v).second) continue;

    const ChainIntervals& dec = l.chain_intervals(e, gamma);
    const int j = detail::interval_index_for_vertex(p, gamma, v);
    if (j < 0 || dec.intervals[static_cast<std::size_t>(j)].empty() ||
        dec.intervals[static_cast<std::size_t>(j)].back() != v) {
      Report::fail(c, "element " + l.element(e).to_hex() +
                          ": vertex " + p.vertex(v).str() +
                          " does not top its chain interval");
      continue;
    }
    for (const int s : l.component_members(e, gamma)) {
      dl.poll("sub-face partition check");
      const bool in_face = l.element(s).test(v);
      const bool keeps_gamma =
          a.defined(s) && a.kappa[static_cast<std::size_t>(s)] == gamma;
      if (keeps_gamma == in_face)
        Report::fail(c, "t=" + l.element(e).to_hex() + " s=" +
                            l.element(s).to_hex() + ": kappa=" +
                            to_string(gamma) + " vs face membership " +
                            (in_face ? "inside" : "outside"));
    }
  }
  return rep;
}

struct SplittingVerdict {
  Report report;
  // Weights of the balanced set, one character summand each, in element
  // order.
  std::vector<Weight> predicted;
};

// Verifies the hypothesis bundle of the splitting criterion against a target
// root system and returns the predicted character decomposition: the weights
// of the balanced set S = {x : delta_alpha = delta_beta = 0}.
inline SplittingVerdict verify_splitting(const ColoredLattice& l,
                                         RootSystemId sys,
                                         const KappaAssignment& a,
                                         const Deadline& dl = {}) {
  SplittingVerdict out;
  Report& rep = out.report;

  for (const Check& c : l.check_weight_graded(sys, dl).checks)
    rep.checks.push_back(c);
  for (const Check& c : l.check_components_rank_symmetric(dl).checks)
    rep.checks.push_back(c);

  // The balanced set and its weights.
  std::vector<int> balanced;
  for (int e = 0; e < l.size(); ++e)
    if (l.component_stats(e, Color::alpha).delta() == 0 &&
        l.component_stats(e, Color::beta).delta() == 0)
      balanced.push_back(e);
  const std::set<int> balanced_set(balanced.begin(), balanced.end());

  auto& dom = rep.add("balanced_weights_dominant");
  for (const int s : balanced) {
    const Weight w = l.weight(s);
    if (!w.is_dominant())
      Report::fail(dom, "balanced element " + l.element(s).to_hex() +
                            " has non-dominant weight " + w.str());
    out.predicted.push_back(w);
  }

  // kappa must cover everything outside the balanced set.
  auto& defined = rep.add("kappa_defined_off_balanced_set");
  for (int e = 0; e < l.size(); ++e)
    if (!balanced_set.contains(e) && !a.defined(e))
      Report::fail(defined,
                   "kappa undefined on element " + l.element(e).to_hex());

  // Product-of-chains structure, once per touched (component, color).
  auto& prod = rep.add("components_product_of_chains");
  auto& sub = rep.add("kappa_subface_setwise");
  std::set<std::pair<int, int>> done;
  for (int e = 0; e < l.size(); ++e) {
    if (balanced_set.contains(e) || !a.defined(e)) continue;
    const Color gamma = a.kappa[static_cast<std::size_t>(e)];
    const int root = l.component_root(e, gamma);
    if (!done.emplace(root, static_cast<int>(gamma)).second) continue;

    for (const Check& c : l.verify_component_isomorphism(e, gamma, dl).checks)
      for (const std::string& w : c.witnesses) Report::fail(prod, w);

    // The kappa = gamma, non-balanced part of the component must be the
    // complement of a face: the full-coordinate set of some nonempty factor.
    const ChainIntervals& dec = l.chain_intervals(e, gamma);
    const std::vector<int>& comp = l.component_members(e, gamma);
    std::set<int> keep;
    for (const int s : comp)
      if (!balanced_set.contains(s) && a.defined(s) &&
          a.kappa[static_cast<std::size_t>(s)] == gamma)
        keep.insert(s);
    bool matched = false;
    for (const auto& iv : dec.intervals) {
      if (iv.empty()) continue;
      std::set<int> complement_of_face;
      for (const int s : comp) {
        dl.poll("set-wise sub-face check");
        bool coordinate_maximal = true;
        for (const int v : iv)
          if (!l.element(s).test(v)) coordinate_maximal = false;
        if (!coordinate_maximal) complement_of_face.insert(s);
      }
      if (complement_of_face == keep) {
        matched = true;
        break;
      }
    }
    if (!matched)
      Report::fail(sub, "component of " + l.element(e).to_hex() + " color " +
                            to_string(gamma) +
                            ": kappa-preimage is not a sub-face");
  }

  return out;
}

}  // namespace weylgrid
