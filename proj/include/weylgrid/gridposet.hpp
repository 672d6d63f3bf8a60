// gridposet.hpp
// -------------
// Two-color grid posets: finite sets of colored lattice points in the plane
// whose order is derived purely from the coordinates.  Vertices lying on a
// common diagonal x - y = const form a chain (covers join diagonal
// neighbours); a step of (-1, +1) between diagonals is a cross cover into the
// next chain toward the upper left.  The module provides the structural
// axioms as a report-style validator, the max property, the canonical finest
// decomposition into stacked order ideals, its inverse composition, and the
// hardcoded fundamental building blocks from which the semistandard poset of
// any dominant weight is assembled.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylgrid/bitmask.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

struct GridVertex {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Color color = Color::alpha;

  friend bool operator==(const GridVertex&, const GridVertex&) = default;

  // Canonical storage order: by (y, x); y is the grading direction, so this
  // order is topological for the covering relation (covers raise y by one
  // diagonal step).  Color last for determinism on duplicate coordinates.
  friend bool canonical_less(const GridVertex& a, const GridVertex& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return static_cast<int>(a.color) < static_cast<int>(b.color);
  }

  std::string str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
           to_string(color) + ")";
  }
};

class GridPoset {
 public:
  GridPoset() = default;

  explicit GridPoset(std::vector<GridVertex> vs) : vertices_(std::move(vs)) {
    std::sort(vertices_.begin(), vertices_.end(),
              [](const GridVertex& a, const GridVertex& b) {
                return canonical_less(a, b);
              });
    derive();
  }

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const GridVertex& vertex(int i) const {
    return vertices_.at(static_cast<std::size_t>(i));
  }
  const std::vector<GridVertex>& vertices() const { return vertices_; }

  int chain_count() const { return static_cast<int>(chains_.size()); }
  const std::vector<std::vector<int>>& chains() const { return chains_; }
  // 0-based chain index; chains are numbered from the upper left (most
  // negative x - y) to the lower right, as increasing diagonals.
  int chain_of(int i) const {
    return chain_of_.at(static_cast<std::size_t>(i));
  }

  // Neighbour indices, -1 when absent.
  int chain_next(int i) const {
    return chain_next_.at(static_cast<std::size_t>(i));
  }
  int chain_prev(int i) const {
    return chain_prev_.at(static_cast<std::size_t>(i));
  }
  int cross_up(int i) const {
    return cross_up_.at(static_cast<std::size_t>(i));
  }
  int cross_down(int i) const {
    return cross_down_.at(static_cast<std::size_t>(i));
  }

  std::vector<int> up_covers(int i) const {
    std::vector<int> r;
    if (chain_next(i) >= 0) r.push_back(chain_next(i));
    if (cross_up(i) >= 0) r.push_back(cross_up(i));
    return r;
  }
  std::vector<int> down_covers(int i) const {
    std::vector<int> r;
    if (chain_prev(i) >= 0) r.push_back(chain_prev(i));
    if (cross_down(i) >= 0) r.push_back(cross_down(i));
    return r;
  }

  std::vector<std::pair<int, int>> cover_edges() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < size(); ++i)
      for (const int j : up_covers(i)) r.emplace_back(i, j);
    std::sort(r.begin(), r.end());
    return r;
  }

  std::vector<int> maximal_indices() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
      if (chain_next(i) < 0 && cross_up(i) < 0) r.push_back(i);
    return r;
  }
  std::vector<int> minimal_indices() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
      if (chain_prev(i) < 0 && cross_down(i) < 0) r.push_back(i);
    return r;
  }

  // The top (maximal) vertex of chain k.
  int periphery(int k) const {
    return chains_.at(static_cast<std::size_t>(k)).back();
  }

  Mask128 chain_mask(int k) const {
    require_mask_capacity();
    Mask128 m;
    for (const int i : chains_.at(static_cast<std::size_t>(k))) m.set(i);
    return m;
  }

  Mask128 full_mask() const {
    require_mask_capacity();
    Mask128 m;
    for (int i = 0; i < size(); ++i) m.set(i);
    return m;
  }

  // Is the mask downward closed under the covering relation?
  bool is_ideal(const Mask128& m) const {
    bool ok = true;
    m.for_each([&](int i) {
      if (i >= size()) {
        ok = false;
        return;
      }
      for (const int j : down_covers(i))
        if (!m.test(j)) ok = false;
    });
    return ok;
  }

  // -------------------------------------------------------------------------
  // Structural axioms
  // -------------------------------------------------------------------------

  // Report-style validation: an invalid poset is a value, not an exception.
  Report validate() const {
    Report rep;

    auto& dup = rep.add("distinct_coordinates");
    for (int i = 0; i + 1 < size(); ++i)
      if (vertices_[static_cast<std::size_t>(i)].x ==
              vertices_[static_cast<std::size_t>(i + 1)].x &&
          vertices_[static_cast<std::size_t>(i)].y ==
              vertices_[static_cast<std::size_t>(i + 1)].y)
        Report::fail(dup, "duplicate coordinate at " + vertex(i).str());

    auto& step = rep.add("cross_cover_chain_step");
    auto& opp = rep.add("cross_cover_opposite_colors");
    for (int i = 0; i < size(); ++i) {
      const int j = cross_up(i);
      if (j < 0) continue;
      if (chain_of(i) != chain_of(j) + 1)
        Report::fail(step, "cover " + vertex(i).str() + " -> " +
                               vertex(j).str() + " skips from chain " +
                               std::to_string(chain_of(i) + 1) + " to " +
                               std::to_string(chain_of(j) + 1));
      if (vertex(i).color == vertex(j).color)
        Report::fail(opp, "cover " + vertex(i).str() + " -> " +
                              vertex(j).str() + " joins equal colors");
    }

    auto& mono = rep.add("chain_color_constant");
    for (int k = 0; k < chain_count(); ++k) {
      const auto& c = chains_[static_cast<std::size_t>(k)];
      for (std::size_t t = 1; t < c.size(); ++t)
        if (vertex(c[t]).color != vertex(c[0]).color)
          Report::fail(mono, "chain " + std::to_string(k + 1) +
                                 " mixes colors at " + vertex(c[t]).str());
    }

    auto& deg = rep.add("cover_degree_bounds");
    for (int i = 0; i < size(); ++i)
      if (up_covers(i).size() > 2 || down_covers(i).size() > 2)
        Report::fail(deg, "vertex " + vertex(i).str() + " exceeds two covers");

    return rep;
  }

  bool is_valid() const { return validate().all_pass(); }

  // Every maximal vertex lies in chain 1 or 2, and distinct maximal vertices
  // carry distinct colors.
  Report max_property() const {
    Report rep;
    auto& c = rep.add("max_property");
    const std::vector<int> maxima = maximal_indices();
    for (const int i : maxima)
      if (chain_of(i) > 1)
        Report::fail(c, "maximal vertex " + vertex(i).str() + " sits in chain " +
                            std::to_string(chain_of(i) + 1));
    for (std::size_t s = 0; s < maxima.size(); ++s)
      for (std::size_t t = s + 1; t < maxima.size(); ++t)
        if (vertex(maxima[s]).color == vertex(maxima[t]).color)
          Report::fail(c, "maximal vertices " + vertex(maxima[s]).str() +
                              " and " + vertex(maxima[t]).str() +
                              " share a color");
    return rep;
  }

  // -------------------------------------------------------------------------
  // Decomposition and composition
  // -------------------------------------------------------------------------

  GridPoset translated(std::int64_t dx, std::int64_t dy) const {
    std::vector<GridVertex> vs = vertices_;
    for (auto& v : vs) {
      v.x = checked_add(v.x, dx);
      v.y = checked_add(v.y, dy);
    }
    return GridPoset(std::move(vs));
  }

  // Translate so the minimal x and minimal y are both zero; the
  // translation-invariant canonical form used for color isomorphism.
  GridPoset normalized() const {
    if (empty()) return {};
    std::int64_t mx = vertices_[0].x, my = vertices_[0].y;
    for (const auto& v : vertices_) {
      mx = std::min(mx, v.x);
      my = std::min(my, v.y);
    }
    return translated(-mx, -my);
  }

  GridPoset subposet(const Mask128& m) const {
    require_mask_capacity();
    std::vector<GridVertex> vs;
    m.for_each([&](int i) {
      if (i < size()) vs.push_back(vertex(i));
    });
    return GridPoset(std::move(vs));
  }

  // The finest stacked-ideal decomposition: repeatedly split off the smallest
  // nonempty proper order ideal whose maximal (resp. minimal) vertices all
  // sit in chains no later than every maximal (resp. minimal) vertex of the
  // remainder.  Chain comparisons are order-invariant under the renumbering
  // a standalone remainder performs, so each stage recurses on the remainder
  // as a poset in its own right.  Returns [p] when indecomposable, [] when
  // empty.
  std::vector<GridPoset> decompose() const {
    std::vector<GridPoset> parts;
    GridPoset current = *this;
    while (!current.empty()) {
      const auto ideal = current.smallest_admissible_ideal();
      if (!ideal) {
        parts.push_back(std::move(current));
        break;
      }
      parts.push_back(current.subposet(*ideal));
      current = current.subposet(current.full_mask() - *ideal);
    }
    return parts;
  }

  // Union of translated parts.  Throws std::invalid_argument when translated
  // copies overlap or when the union violates the structural axioms.
  static GridPoset compose(
      const std::vector<GridPoset>& parts,
      const std::vector<std::pair<std::int64_t, std::int64_t>>& offsets) {
    if (parts.size() != offsets.size())
      throw std::invalid_argument(
          "weylgrid: compose needs one offset per part");
    std::vector<GridVertex> vs;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      for (GridVertex v : parts[k].vertices()) {
        v.x = checked_add(v.x, offsets[k].first);
        v.y = checked_add(v.y, offsets[k].second);
        if (!seen.emplace(v.x, v.y).second)
          throw std::invalid_argument(
              "weylgrid: compose parts overlap at (" + std::to_string(v.x) +
              "," + std::to_string(v.y) + ")");
        vs.push_back(v);
      }
    }
    GridPoset p(std::move(vs));
    if (!p.is_valid())
      throw std::invalid_argument(
          "weylgrid: composed poset violates the grid axioms");
    return p;
  }

 private:
  std::vector<GridVertex> vertices_;  // canonical (y, x) order
  std::vector<std::vector<int>> chains_;
  std::vector<int> chain_of_;
  std::vector<int> chain_next_, chain_prev_, cross_up_, cross_down_;

  void require_mask_capacity() const {
    if (size() > Mask128::kCapacity)
      throw cap_exceeded("weylgrid: poset exceeds " +
                         std::to_string(Mask128::kCapacity) + " vertices");
  }

  void derive() {
    const int n = size();
    chain_of_.assign(static_cast<std::size_t>(n), -1);
    chain_next_.assign(static_cast<std::size_t>(n), -1);
    chain_prev_.assign(static_cast<std::size_t>(n), -1);
    cross_up_.assign(static_cast<std::size_t>(n), -1);
    cross_down_.assign(static_cast<std::size_t>(n), -1);
    chains_.clear();

    // Chains: diagonal classes x - y = const, ascending; within a chain,
    // ascending x.
    std::map<std::int64_t, std::vector<int>> by_diagonal;
    for (int i = 0; i < n; ++i)
      by_diagonal[checked_sub(vertices_[static_cast<std::size_t>(i)].x,
                              vertices_[static_cast<std::size_t>(i)].y)]
          .push_back(i);
    for (auto& [d, members] : by_diagonal) {
      std::sort(members.begin(), members.end(), [&](int i, int j) {
        return vertices_[static_cast<std::size_t>(i)].x <
               vertices_[static_cast<std::size_t>(j)].x;
      });
      const int k = static_cast<int>(chains_.size());
      for (std::size_t t = 0; t < members.size(); ++t) {
        chain_of_[static_cast<std::size_t>(members[t])] = k;
        if (t + 1 < members.size()) {
          chain_next_[static_cast<std::size_t>(members[t])] = members[t + 1];
          chain_prev_[static_cast<std::size_t>(members[t + 1])] = members[t];
        }
      }
      chains_.push_back(std::move(members));
    }

    // Cross covers: u -> u + (-1, +1).  On duplicate coordinates the first
    // occurrence wins; validate() reports the duplication itself.
    std::map<std::pair<std::int64_t, std::int64_t>, int> at;
    for (int i = 0; i < n; ++i)
      at.emplace(std::make_pair(vertices_[static_cast<std::size_t>(i)].x,
                                vertices_[static_cast<std::size_t>(i)].y),
                 i);
    for (int i = 0; i < n; ++i) {
      const auto& v = vertices_[static_cast<std::size_t>(i)];
      const auto it = at.find({v.x - 1, v.y + 1});
      if (it == at.end()) continue;
      cross_up_[static_cast<std::size_t>(i)] = it->second;
      cross_down_[static_cast<std::size_t>(it->second)] = i;
    }
  }

  // Smallest nonempty proper order ideal satisfying the split condition, or
  // nullopt.  Ideals are enumerated by cardinality, ties broken by ascending
  // mask value, so the result is deterministic.
  std::optional<Mask128> smallest_admissible_ideal() const {
    require_mask_capacity();
    const int n = size();
    if (n <= 1) return std::nullopt;
    std::vector<Mask128> layer{Mask128::empty_set()};
    for (int k = 1; k < n; ++k) {
      std::vector<Mask128> next;
      for (const Mask128& ideal : layer)
        for (int v = 0; v < n; ++v) {
          if (ideal.test(v)) continue;
          bool addable = true;
          for (const int j : down_covers(v))
            if (!ideal.test(j)) addable = false;
          if (addable) {
            Mask128 grown = ideal;
            grown.set(v);
            next.push_back(grown);
          }
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (const Mask128& ideal : next)
        if (split_condition(ideal)) return ideal;
      layer = std::move(next);
    }
    return std::nullopt;
  }

  // Every maximal vertex of the ideal must sit in a chain no later than every
  // maximal vertex of the complement, and likewise for minimal vertices.
  bool split_condition(const Mask128& ideal) const {
    const int n = size();
    int ideal_max = -1, ideal_min = -1;    // latest chain seen
    int rest_max = n + 1, rest_min = n + 1;  // earliest chain seen
    for (int i = 0; i < n; ++i) {
      const bool inside = ideal.test(i);
      bool up_within = false, down_within = false;
      for (const int j : up_covers(i))
        if (ideal.test(j) == inside) up_within = true;
      for (const int j : down_covers(i))
        if (ideal.test(j) == inside) down_within = true;
      if (inside) {
        if (!up_within) ideal_max = std::max(ideal_max, chain_of(i));
        if (!down_within) ideal_min = std::max(ideal_min, chain_of(i));
      } else {
        if (!up_within) rest_max = std::min(rest_max, chain_of(i));
        if (!down_within) rest_min = std::min(rest_min, chain_of(i));
      }
    }
    return ideal_max <= rest_max && ideal_min <= rest_min;
  }
};

// Same shape and colors after normalizing translation.
inline bool color_isomorphic(const GridPoset& p, const GridPoset& q) {
  return p.normalized().vertices() == q.normalized().vertices();
}

// ---------------------------------------------------------------------------
// Fundamental and semistandard posets
// ---------------------------------------------------------------------------

namespace detail {

struct LocalVertex {
  int dx, dy;
  Color c;
};

// Vertex offsets of the two fundamental posets of each system, relative to an
// anchor at the chain-1-most bottom vertex.  Read off the canonical pictures
// of the (2,2) posets by splitting them into their stacked components.
inline const std::vector<LocalVertex>& fundamental_shape(RootSystemId s,
                                                         bool first_coord) {
  using enum Color;
  // shape10 = the poset attached to weight (1,0), shape01 to (0,1).
  static const std::vector<LocalVertex> a1a1_10 = {{0, 0, alpha}};
  static const std::vector<LocalVertex> a1a1_01 = {{0, 0, beta}};
  static const std::vector<LocalVertex> a2_10 = {{0, 0, beta}, {-1, 1, alpha}};
  static const std::vector<LocalVertex> a2_01 = {{0, 0, alpha}, {-1, 1, beta}};
  static const std::vector<LocalVertex> c2_10 = {
      {0, 0, alpha}, {-1, 1, beta}, {-2, 2, alpha}};
  static const std::vector<LocalVertex> c2_01 = {
      {0, 0, beta}, {-1, 1, alpha}, {0, 2, alpha}, {-1, 3, beta}};
  static const std::vector<LocalVertex> g2_10 = {
      {0, 0, alpha}, {-1, 1, beta},  {-2, 2, alpha},
      {-1, 3, alpha}, {-2, 4, beta}, {-3, 5, alpha}};
  static const std::vector<LocalVertex> g2_01 = {
      {0, 0, beta},   {-1, 1, alpha}, {0, 2, alpha}, {1, 3, alpha},
      {-1, 3, beta},  {0, 4, beta},   {-2, 4, alpha}, {-1, 5, alpha},
      {0, 6, alpha},  {-1, 7, beta}};
  switch (s) {
    case RootSystemId::A1xA1:
      return first_coord ? a1a1_10 : a1a1_01;
    case RootSystemId::A2:
      return first_coord ? a2_10 : a2_01;
    case RootSystemId::C2:
      return first_coord ? c2_10 : c2_01;
    case RootSystemId::G2:
      return first_coord ? g2_10 : g2_01;
  }
  throw std::invalid_argument("weylgrid: unknown root system");
}

struct Displacement {
  int dx, dy;
};

// Anchor of the first copy, displacement between copies of the first kind,
// hop from the last first-kind copy to the first second-kind copy, and
// displacement between copies of the second kind.  Calibrated so that the
// (2,2) posets land exactly on the canonical pictures.
struct PlacementRule {
  Displacement origin, first_step, cross_step, second_step;
};

inline const PlacementRule& placement_rule(RootSystemId s,
                                           FundamentalOrder order) {
  static const PlacementRule table[4][2] = {
      // [system][order]: order 0 = beta_alpha, 1 = alpha_beta
      /* A1xA1 */ {{{0, 2}, {1, 1}, {2, -1}, {1, 1}},
                   {{0, 2}, {1, 1}, {2, -1}, {1, 1}}},
      /* A2    */ {{{1, 1}, {1, 1}, {2, 0}, {1, 1}},
                   {{1, 1}, {1, 1}, {2, 0}, {1, 1}}},
      /* C2    */ {{{1, 0}, {2, 2}, {3, 1}, {1, 1}},
                   {{2, 0}, {1, 1}, {2, 0}, {2, 2}}},
      /* G2    */ {{{2, 0}, {3, 3}, {4, 2}, {2, 2}},
                   {{3, 0}, {2, 2}, {2, 0}, {3, 3}}}};
  return table[static_cast<int>(s)][static_cast<int>(order)];
}

inline void append_copy(std::vector<GridVertex>& out,
                        const std::vector<LocalVertex>& shape,
                        std::int64_t ax, std::int64_t ay) {
  for (const LocalVertex& v : shape)
    out.push_back({ax + v.dx, ay + v.dy, v.c});
}

}  // namespace detail

// The indecomposable poset attached to weight (1,0) or (0,1), in normalized
// coordinates.
inline GridPoset fundamental_poset(RootSystemId s, const Lambda2& which) {
  const bool first_coord = which.a == 1 && which.b == 0;
  if (!first_coord && !(which.a == 0 && which.b == 1))
    throw std::invalid_argument(
        "weylgrid: fundamental weight must be (1,0) or (0,1)");
  std::vector<GridVertex> vs;
  detail::append_copy(vs, detail::fundamental_shape(s, first_coord), 0, 0);
  return GridPoset(std::move(vs)).normalized();
}

// The semistandard poset of lambda = (a, b): a stack of b copies of the
// (0,1)-fundamental and a copies of the (1,0)-fundamental, in the kind order
// given by `order`, glued with the per-system displacements.  The result is
// certified on the spot: it must satisfy the structural axioms and the max
// property, otherwise the placement data itself is wrong.
inline GridPoset semistandard_poset(RootSystemId s, const Lambda2& lam,
                                    FundamentalOrder order) {
  const detail::PlacementRule& rule = detail::placement_rule(s, order);
  const bool beta_first = order == FundamentalOrder::beta_alpha;
  const auto& first_shape = detail::fundamental_shape(s, !beta_first);
  const auto& second_shape = detail::fundamental_shape(s, beta_first);
  const int n_first = beta_first ? lam.b : lam.a;
  const int n_second = beta_first ? lam.a : lam.b;

  std::vector<GridVertex> vs;
  std::int64_t ax = rule.origin.dx, ay = rule.origin.dy;
  for (int k = 0; k < n_first; ++k) {
    detail::append_copy(vs, first_shape, ax, ay);
    if (k + 1 < n_first) {
      ax += rule.first_step.dx;
      ay += rule.first_step.dy;
    }
  }
  if (n_first == 0) {
    ax -= rule.first_step.dx;
    ay -= rule.first_step.dy;
  }
  ax += rule.cross_step.dx;
  ay += rule.cross_step.dy;
  for (int j = 0; j < n_second; ++j) {
    detail::append_copy(vs, second_shape, ax, ay);
    ax += rule.second_step.dx;
    ay += rule.second_step.dy;
  }

  GridPoset p(std::move(vs));
  if (!p.is_valid())
    throw internal_consistency_error(
        "weylgrid: semistandard poset failed validation for " + to_string(s) +
        " lambda=" + lam.str() + " order=" + to_string(order));
  if (!p.max_property().all_pass())
    throw internal_consistency_error(
        "weylgrid: semistandard poset lacks the max property for " +
        to_string(s) + " lambda=" + lam.str() + " order=" + to_string(order));
  return p;
}

}  // namespace weylgrid
