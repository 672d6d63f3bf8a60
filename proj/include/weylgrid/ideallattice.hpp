// ideallattice.hpp
// ----------------
// The distributive lattice of order ideals of a two-color grid poset, with
// covers colored by the added vertex.  Provides rank-by-rank enumeration
// (deterministic element order: by cardinality, then by mask value),
// per-color connected components with rank/length/weight statistics, the
// structural checks (diamond coloring, weight grading against a Cartan
// matrix, rank symmetry of components), and the interval decomposition that
// exhibits each color component as a product of chains.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylgrid/bitmask.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/gridposet.hpp"
#include "weylgrid/groupring.hpp"
#include "weylgrid/qseries.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

struct ColoredCover {
  int from = 0;  // smaller ideal
  int to = 0;    // ideal with one more vertex
  Color color = Color::alpha;

  friend bool operator==(const ColoredCover&, const ColoredCover&) = default;
};

// Rank and length of one element's color component; m = 2*rho - len is the
// coordinate of the weight.
struct ComponentStats {
  std::int64_t rho = 0;
  std::int64_t len = 0;

  std::int64_t delta() const { return len - rho; }
  std::int64_t m() const { return 2 * rho - len; }
};

// Per-color chain intervals attached to one component: intervals[j] lists, in
// chain order, the vertices of the j-th gamma-colored chain that the
// component can toggle.  The component is isomorphic to the product of the
// ideal chains J(I_j), of sizes |I_j| + 1.
struct ChainIntervals {
  std::vector<std::vector<int>> intervals;

  std::int64_t product_size() const {
    std::int64_t n = 1;
    for (const auto& iv : intervals)
      n = checked_mul(n, static_cast<std::int64_t>(iv.size()) + 1);
    return n;
  }

  std::int64_t total_length() const {
    std::int64_t n = 0;
    for (const auto& iv : intervals) n += static_cast<std::int64_t>(iv.size());
    return n;
  }
};

class ColoredLattice {
 public:
  // All order ideals of p.  Throws cap_exceeded when the element count would
  // pass `element_cap` (and for posets beyond the 128-vertex mask capacity).
  static ColoredLattice enumerate(const GridPoset& p,
                                  std::size_t element_cap = 1'000'000) {
    if (p.size() > Mask128::kCapacity)
      throw cap_exceeded("weylgrid: poset exceeds " +
                         std::to_string(Mask128::kCapacity) + " vertices");
    ColoredLattice l;
    l.poset_ = p;

    std::vector<Mask128> layer{Mask128::empty_set()};
    l.elements_ = layer;
    while (!layer.empty()) {
      std::vector<Mask128> next;
      for (const Mask128& m : layer)
        for (int v = 0; v < p.size(); ++v) {
          if (m.test(v)) continue;
          bool addable = true;
          for (const int j : p.down_covers(v))
            if (!m.test(j)) addable = false;
          if (addable) {
            Mask128 grown = m;
            grown.set(v);
            next.push_back(grown);
          }
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (l.elements_.size() + next.size() > element_cap)
        throw cap_exceeded(
            "weylgrid: ideal lattice exceeds the element cap of " +
            std::to_string(element_cap));
      l.elements_.insert(l.elements_.end(), next.begin(), next.end());
      layer = std::move(next);
    }

    for (int e = 0; e < l.size(); ++e) l.index_.emplace(l.elements_[e], e);

    // Covers, in deterministic order: source element ascending, added vertex
    // ascending.
    l.up_.resize(l.elements_.size());
    l.down_.resize(l.elements_.size());
    for (int e = 0; e < l.size(); ++e) {
      const Mask128& m = l.elements_[static_cast<std::size_t>(e)];
      for (int v = 0; v < p.size(); ++v) {
        if (m.test(v)) continue;
        bool addable = true;
        for (const int j : p.down_covers(v))
          if (!m.test(j)) addable = false;
        if (!addable) continue;
        Mask128 grown = m;
        grown.set(v);
        const int to = l.index_of(grown);
        l.covers_.push_back({e, to, p.vertex(v).color});
        l.up_[static_cast<std::size_t>(e)].push_back(
            {static_cast<int>(l.covers_.size()) - 1, to, v});
        l.down_[static_cast<std::size_t>(to)].push_back(
            {static_cast<int>(l.covers_.size()) - 1, e, v});
      }
    }

    // Union-find per color, fully compressed before the lattice is exposed,
    // so component_root is a plain read afterwards (and safe concurrently).
    for (const int c : {0, 1}) {
      auto& parent = l.parent_[c];
      parent.resize(l.elements_.size());
      std::iota(parent.begin(), parent.end(), 0);
      const auto find = [&parent](int e) {
        int root = e;
        while (parent[static_cast<std::size_t>(root)] != root)
          root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(e)] != root) {
          const int next = parent[static_cast<std::size_t>(e)];
          parent[static_cast<std::size_t>(e)] = root;
          e = next;
        }
        return root;
      };
      for (const ColoredCover& cv : l.covers_) {
        if (static_cast<int>(cv.color) != c) continue;
        const int ra = find(cv.from), rb = find(cv.to);
        if (ra != rb)
          // Smaller element index wins, for deterministic roots.
          parent[static_cast<std::size_t>(std::max(ra, rb))] =
              std::min(ra, rb);
      }
      for (int e = 0; e < l.size(); ++e)
        parent[static_cast<std::size_t>(e)] = find(e);

      auto& range = l.comp_rank_range_[c];
      range.assign(l.elements_.size(), {-1, -1});
      auto& members = l.comp_members_[c];
      for (int e = 0; e < l.size(); ++e) {
        const int r = parent[static_cast<std::size_t>(e)];
        auto& [lo, hi] = range[static_cast<std::size_t>(r)];
        const std::int64_t rk = l.rank_of(e);
        lo = lo < 0 ? rk : std::min(lo, rk);
        hi = hi < 0 ? rk : std::max(hi, rk);
        members[r].push_back(e);
      }
    }
    return l;
  }

  const GridPoset& poset() const { return poset_; }

  int size() const { return static_cast<int>(elements_.size()); }

  const Mask128& element(int e) const {
    return elements_.at(static_cast<std::size_t>(e));
  }

  int index_of(const Mask128& m) const {
    const auto it = index_.find(m);
    if (it == index_.end())
      throw std::invalid_argument("weylgrid: mask is not an ideal of the poset");
    return it->second;
  }

  std::int64_t rank_of(int e) const { return element(e).count(); }

  // The top element: the full vertex set.
  int max_index() const { return size() - 1; }

  const std::vector<ColoredCover>& covers() const { return covers_; }

  struct Adjacent {
    int cover_index;  // into covers()
    int neighbor;     // element index
    int vertex;       // poset vertex toggled
  };
  const std::vector<Adjacent>& up_neighbors(int e) const {
    return up_.at(static_cast<std::size_t>(e));
  }
  const std::vector<Adjacent>& down_neighbors(int e) const {
    return down_.at(static_cast<std::size_t>(e));
  }

  // -------------------------------------------------------------------------
  // Color components and statistics
  // -------------------------------------------------------------------------

  int component_root(int e, Color c) const {
    return parent_[static_cast<int>(c)].at(static_cast<std::size_t>(e));
  }

  // Element indices of comp_c(e), ascending.
  const std::vector<int>& component_members(int e, Color c) const {
    return comp_members_[static_cast<int>(c)].at(component_root(e, c));
  }

  ComponentStats component_stats(int e, Color c) const {
    const auto& [lo, hi] =
        comp_rank_range_[static_cast<int>(c)][static_cast<std::size_t>(
            component_root(e, c))];
    return {rank_of(e) - lo, hi - lo};
  }

  Weight weight(int e) const {
    return {component_stats(e, Color::alpha).m(),
            component_stats(e, Color::beta).m()};
  }

  QPolynomial rank_generating_function() const {
    QPolynomial p;
    p.coefficients.assign(static_cast<std::size_t>(poset_.size()) + 1, 0);
    for (int e = 0; e < size(); ++e)
      ++p.coefficients[static_cast<std::size_t>(rank_of(e))];
    p.normalize();
    return p;
  }

  GroupRingElement weight_generating_function() const {
    GroupRingElement f;
    for (int e = 0; e < size(); ++e) f.add_term(weight(e), 1);
    return f;
  }

  // -------------------------------------------------------------------------
  // Structural checks
  // -------------------------------------------------------------------------

  // Every pair of up-covers closes into a diamond whose opposite edges carry
  // equal colors.
  Report check_diamond_colored(const Deadline& dl = {}) const {
    Report rep;
    auto& c = rep.add("diamond");
    for (int e = 0; e < size(); ++e) {
      dl.poll("diamond check");
      const auto& ups = up_neighbors(e);
      for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          const Mask128 join =
              element(ups[i].neighbor) | element(ups[j].neighbor);
          const auto it = index_.find(join);
          if (it == index_.end()) {
            Report::fail(c, "join of covers above element " +
                                element(e).to_hex() + " is not an ideal");
            continue;
          }
          const Color ci = poset_.vertex(ups[i].vertex).color;
          const Color cj = poset_.vertex(ups[j].vertex).color;
          // Edge u_i -> join toggles vertex j and vice versa; opposite edges
          // of the diamond must repeat the colors.
          if (cover_color(ups[i].neighbor, it->second) != cj ||
              cover_color(ups[j].neighbor, it->second) != ci)
            Report::fail(c, "diamond above element " + element(e).to_hex() +
                                " mixes edge colors");
        }
    }
    return rep;
  }

  // Every i-colored cover shifts the weight by the i-th simple root of sys.
  Report check_weight_graded(RootSystemId sys, const Deadline& dl = {}) const {
    Report rep;
    auto& c = rep.add("weight_graded");
    for (const ColoredCover& cv : covers_) {
      dl.poll("weight grading check");
      const Weight shift = weight(cv.to) - weight(cv.from);
      if (!(shift == simple_root(sys, cv.color)))
        Report::fail(c, "cover " + element(cv.from).to_hex() + " -> " +
                            element(cv.to).to_hex() + " of color " +
                            to_string(cv.color) + " shifts weight by " +
                            shift.str());
    }
    return rep;
  }

  // Cardinality histogram of each color component is palindromic.
  Report check_components_rank_symmetric(const Deadline& dl = {}) const {
    Report rep;
    auto& c = rep.add("components_rank_symmetric");
    for (const Color col : {Color::alpha, Color::beta}) {
      std::map<int, std::map<std::int64_t, std::int64_t>> hist;
      for (int e = 0; e < size(); ++e) {
        dl.poll("rank symmetry check");
        ++hist[component_root(e, col)][rank_of(e)];
      }
      for (const auto& [root, h] : hist) {
        const std::int64_t lo = h.begin()->first, hi = h.rbegin()->first;
        for (std::int64_t k = lo; k <= hi; ++k) {
          const auto a = h.find(k), b = h.find(lo + hi - k);
          const std::int64_t ca = a == h.end() ? 0 : a->second;
          const std::int64_t cb = b == h.end() ? 0 : b->second;
          if (ca != cb)
            Report::fail(c, to_string(col) + "-component of element " +
                                element(root).to_hex() +
                                " is not rank symmetric");
        }
      }
    }
    return rep;
  }

  // -------------------------------------------------------------------------
  // Product-of-chains structure of color components
  // -------------------------------------------------------------------------

  // The toggleable interval of each gamma-chain for the component of t.
  // Constant across the component, hence memoized per component root.
  const ChainIntervals& chain_intervals(int t, Color gamma) const {
    const int root = component_root(t, gamma);
    const auto key = std::make_pair(root, static_cast<int>(gamma));
    {
      std::lock_guard<std::mutex> lock(*interval_mutex_);
      const auto it = interval_memo_.find(key);
      if (it != interval_memo_.end()) return it->second;
    }
    ChainIntervals dec = compute_chain_intervals(t, gamma);
    std::lock_guard<std::mutex> lock(*interval_mutex_);
    return interval_memo_.emplace(key, std::move(dec)).first->second;
  }

  // Full certification that phi(s) = (|s cap I_1|, ..., |s cap I_k|) is an
  // order isomorphism from comp_gamma(t) onto the product of chains.
  Report verify_component_isomorphism(int t, Color gamma,
                                      const Deadline& dl = {}) const {
    Report rep;
    auto& c = rep.add("components_product_of_chains");
    const ChainIntervals& dec = chain_intervals(t, gamma);
    const std::vector<int>& comp = component_members(t, gamma);

    if (dec.product_size() != static_cast<std::int64_t>(comp.size())) {
      Report::fail(c, "component of " + element(t).to_hex() + " has " +
                          std::to_string(comp.size()) +
                          " elements but the intervals predict " +
                          std::to_string(dec.product_size()));
      return rep;
    }

    // Collect coordinates; check each element agrees with t outside the
    // intervals and hits a distinct coordinate tuple.
    std::map<std::vector<std::int64_t>, int> seen;
    std::vector<std::vector<std::int64_t>> coord_of(comp.size());
    Mask128 interval_mask;
    for (const auto& iv : dec.intervals)
      for (const int v : iv) interval_mask.set(v);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Mask128& s = element(comp[i]);
      if (!((s - interval_mask) == (element(t) - interval_mask))) {
        Report::fail(c, "element " + s.to_hex() +
                            " differs from the component base outside the "
                            "chain intervals");
        return rep;
      }
      std::vector<std::int64_t> coord;
      for (const auto& iv : dec.intervals) {
        std::int64_t pos = 0;
        for (const int v : iv)
          if (s.test(v)) ++pos;
        // The in-interval part must be a prefix of the interval.
        for (std::int64_t q = 0; q < static_cast<std::int64_t>(iv.size()); ++q)
          if (s.test(iv[static_cast<std::size_t>(q)]) != (q < pos)) {
            Report::fail(c, "element " + s.to_hex() +
                                " meets a chain interval in a non-prefix");
            return rep;
          }
        coord.push_back(pos);
      }
      if (!seen.emplace(coord, comp[i]).second) {
        Report::fail(c, "two component elements share phi-coordinates");
        return rep;
      }
      coord_of[i] = std::move(coord);
    }

    // Order-preserving in both directions: containment iff coordinatewise <=.
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) {
        if (i == j) continue;
        dl.poll("product-of-chains check");
        const bool le_set =
            element(comp[i]).is_subset_of(element(comp[j]));
        bool le_coord = true;
        for (std::size_t q = 0; q < coord_of[i].size(); ++q)
          if (coord_of[i][q] > coord_of[j][q]) le_coord = false;
        if (le_set != le_coord) {
          Report::fail(c, "phi is not an order isomorphism at " +
                              element(comp[i]).to_hex() + " vs " +
                              element(comp[j]).to_hex());
          return rep;
        }
      }
    return rep;
  }

  // Component statistics recomputed through the interval decomposition:
  // rho = sum |t cap I_j|, len = sum |I_j|.  Used as the independent route
  // against component_stats.
  ComponentStats component_stats_via_intervals(int t, Color gamma) const {
    const ChainIntervals& dec = chain_intervals(t, gamma);
    ComponentStats st;
    st.len = dec.total_length();
    for (const auto& iv : dec.intervals)
      for (const int v : iv)
        if (element(t).test(v)) ++st.rho;
    return st;
  }

 private:
  GridPoset poset_;
  std::vector<Mask128> elements_;  // rank-major, then ascending mask
  std::map<Mask128, int> index_;
  std::vector<ColoredCover> covers_;
  std::vector<std::vector<Adjacent>> up_, down_;
  std::vector<int> parent_[2];  // fully compressed: parent_[c][e] is the root
  std::vector<std::pair<std::int64_t, std::int64_t>> comp_rank_range_[2];
  std::map<int, std::vector<int>> comp_members_[2];
  mutable std::map<std::pair<int, int>, ChainIntervals> interval_memo_;
  mutable std::unique_ptr<std::mutex> interval_mutex_ =
      std::make_unique<std::mutex>();

  Color cover_color(int from, int to) const {
    for (const Adjacent& a : up_neighbors(from))
      if (a.neighbor == to) return poset_.vertex(a.vertex).color;
    throw internal_consistency_error("weylgrid: missing cover in diamond");
  }

  ChainIntervals compute_chain_intervals(int t, Color gamma) const {
    const Mask128& m = element(t);
    ChainIntervals dec;
    for (int k = 0; k < poset_.chain_count(); ++k) {
      const auto& chain = poset_.chains()[static_cast<std::size_t>(k)];
      if (poset_.vertex(chain[0]).color != gamma) continue;
      // The ideal meets the chain in a prefix.
      std::int64_t c = 0;
      while (c < static_cast<std::int64_t>(chain.size()) &&
             m.test(chain[static_cast<std::size_t>(c)]))
        ++c;
      for (std::int64_t q = c; q < static_cast<std::int64_t>(chain.size());
           ++q)
        if (m.test(chain[static_cast<std::size_t>(q)]))
          throw internal_consistency_error(
              "weylgrid: ideal meets a chain in a non-prefix");
      // Walk down through removable vertices: those whose cross up-cover is
      // absent from the ideal.
      std::int64_t lo = c;
      while (lo > 0) {
        const int v = chain[static_cast<std::size_t>(lo - 1)];
        const int w = poset_.cross_up(v);
        if (w >= 0 && m.test(w)) break;
        --lo;
      }
      // Walk up through addable vertices: those whose cross down-cover is
      // absent from the poset or already in the ideal.
      std::int64_t hi = c;
      while (hi < static_cast<std::int64_t>(chain.size())) {
        const int v = chain[static_cast<std::size_t>(hi)];
        const int w = poset_.cross_down(v);
        if (w >= 0 && !m.test(w)) break;
        ++hi;
      }
      std::vector<int> interval;
      for (std::int64_t q = lo; q < hi; ++q)
        interval.push_back(chain[static_cast<std::size_t>(q)]);

      // Well-formedness: toggling the whole interval stays inside the ideal
      // lattice in both directions.
      Mask128 plus = m, minus = m;
      for (const int v : interval) {
        plus.set(v);
        minus.reset(v);
      }
      if (!poset_.is_ideal(plus) || !poset_.is_ideal(minus))
        throw internal_consistency_error(
            "weylgrid: chain interval is not toggleable");
      dec.intervals.push_back(std::move(interval));
    }
    return dec;
  }
};

}  // namespace weylgrid
