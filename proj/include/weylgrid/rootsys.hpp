// rootsys.hpp
// -----------
// Exact rank-two root system data: Cartan matrices, simple roots in
// fundamental-weight coordinates, simple reflections, the full Weyl group by
// closure, positive coroots as integer linear functionals, and the per-type
// closed-form exponent tables for rank generating functions.
//
// Conventions (fixed throughout the library):
//   * Rows and columns are indexed (alpha, beta) with alpha the SHORT simple
//     root for C2 and G2 (for A1xA1 and A2 both roots have equal length).
//   * A weight (a, b) means a*omega_alpha + b*omega_beta, so the simple-root
//     rows of the Cartan matrix are the simple roots in weight coordinates.
//   * All pairings are integers; no inner-product normalization is used
//     anywhere.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylgrid/core.hpp"

namespace weylgrid {

// ---------------------------------------------------------------------------
// Cartan data
// ---------------------------------------------------------------------------

// 2x2 Cartan matrix; m[i][j] = <alpha_i, alpha_j^vee> with i,j in
// {0=alpha, 1=beta}.
struct CartanMatrix {
  std::array<std::array<int, 2>, 2> m;

  int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

inline CartanMatrix cartan_matrix(RootSystemId s) {
  switch (s) {
    case RootSystemId::A1xA1: return {{{{{2, 0}}, {{0, 2}}}}};
    case RootSystemId::A2:    return {{{{{2, -1}}, {{-1, 2}}}}};
    case RootSystemId::C2:    return {{{{{2, -1}}, {{-2, 2}}}}};
    case RootSystemId::G2:    return {{{{{2, -1}}, {{-3, 2}}}}};
  }
  throw std::invalid_argument("weylgrid: invalid RootSystemId");
}

// The simple root of the given color, in fundamental-weight coordinates
// (= the corresponding row of the Cartan matrix).
inline Weight simple_root(RootSystemId s, Color c) {
  const auto cm = cartan_matrix(s);
  const auto& row = cm.m[static_cast<int>(c)];
  return {row[0], row[1]};
}

// Half-sum of positive roots; in fundamental-weight coordinates always (1,1).
inline Weight rho() { return {1, 1}; }

// s_i(mu) = mu - <mu, alpha_i^vee> * alpha_i.  The pairing with a simple
// coroot is just the corresponding weight coordinate.
inline Weight simple_reflection(RootSystemId s, Color c, const Weight& mu) {
  const std::int64_t coeff = (c == Color::alpha) ? mu.a : mu.b;
  return mu - simple_root(s, c) * coeff;
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

// A Weyl group element as its integer action matrix on weight column vectors:
// w(mu) = action * mu.  Canonicalized by the matrix itself; `length` is the
// minimal word length in the simple reflections and det = (-1)^length.
struct WeylGroupElement {
  std::array<std::array<std::int64_t, 2>, 2> action;
  int length = 0;
  int det = 1;

  Weight apply(const Weight& mu) const {
    return {checked_add(checked_mul(action[0][0], mu.a),
                        checked_mul(action[0][1], mu.b)),
            checked_add(checked_mul(action[1][0], mu.a),
                        checked_mul(action[1][1], mu.b))};
  }

  friend bool operator==(const WeylGroupElement& x, const WeylGroupElement& y) {
    return x.action == y.action;
  }
};

namespace detail {

inline std::array<std::array<std::int64_t, 2>, 2> matmul(
    const std::array<std::array<std::int64_t, 2>, 2>& x,
    const std::array<std::array<std::int64_t, 2>, 2>& y) {
  std::array<std::array<std::int64_t, 2>, 2> r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = checked_add(checked_mul(x[i][0], y[0][j]),
                            checked_mul(x[i][1], y[1][j]));
  return r;
}

// Matrix of the simple reflection s_c acting on weight column vectors.
inline std::array<std::array<std::int64_t, 2>, 2> reflection_matrix(
    RootSystemId s, Color c) {
  const Weight e_alpha{1, 0}, e_beta{0, 1};
  const Weight c0 = simple_reflection(s, c, e_alpha);
  const Weight c1 = simple_reflection(s, c, e_beta);
  return {{{{c0.a, c1.a}}, {{c0.b, c1.b}}}};
}

}  // namespace detail

namespace detail {

// The full Weyl group by breadth-first closure over the simple reflections,
// sorted by (length, action matrix) for a deterministic element order.
// A safety bound guards against a corrupted Cartan matrix producing an
// infinite (non-crystallographic) closure.
inline std::vector<WeylGroupElement> compute_weyl_group(RootSystemId s) {
  constexpr std::size_t kSafetyBound = 100;
  const auto sa = detail::reflection_matrix(s, Color::alpha);
  const auto sb = detail::reflection_matrix(s, Color::beta);

  std::map<std::array<std::array<std::int64_t, 2>, 2>, int> seen;  // matrix -> length
  std::vector<WeylGroupElement> elems;
  const WeylGroupElement identity{{{{{1, 0}}, {{0, 1}}}}, 0, 1};
  seen.emplace(identity.action, 0);
  elems.push_back(identity);

  // Breadth-first: frontier of elements at the current length.
  std::vector<WeylGroupElement> frontier{identity};
  while (!frontier.empty()) {
    std::vector<WeylGroupElement> next;
    for (const auto& w : frontier) {
      for (const auto& gen : {sa, sb}) {
        // Right-multiply by a generator: (w * s)(mu) = w(s(mu)).
        const auto m = detail::matmul(w.action, gen);
        if (seen.emplace(m, w.length + 1).second) {
          next.push_back(WeylGroupElement{m, w.length + 1, -w.det});
          if (seen.size() > kSafetyBound)
            throw internal_consistency_error(
                "weylgrid: Weyl group closure exceeded safety bound");
        }
      }
    }
    for (const auto& w : next) elems.push_back(w);
    frontier = std::move(next);
  }

  std::sort(elems.begin(), elems.end(),
            [](const WeylGroupElement& x, const WeylGroupElement& y) {
              if (x.length != y.length) return x.length < y.length;
              return x.action < y.action;
            });
  return elems;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Positive coroots as linear functionals
// ---------------------------------------------------------------------------

// The pairing mu |-> <mu, gamma^vee> with a positive coroot gamma^vee, stored
// as the integer coefficient pair (ca, cb): value = ca*mu.a + cb*mu.b.
struct CorootPairing {
  std::int64_t ca = 0;
  std::int64_t cb = 0;

  std::int64_t operator()(const Weight& mu) const {
    return checked_add(checked_mul(ca, mu.a), checked_mul(cb, mu.b));
  }

  friend bool operator==(const CorootPairing&, const CorootPairing&) = default;
  friend auto operator<=>(const CorootPairing&, const CorootPairing&) = default;
};

namespace detail {

// Is the weight-coordinate vector mu a positive root?  Decided exactly in
// simple-root coordinates: mu = x*alpha + y*beta where (x, y) * det(C) is the
// integer vector mu_row * adj(C); positive means both coordinates >= 0 (and
// mu != 0).  det(C) > 0 for all four types, so no sign flip is needed.
inline bool is_positive_root_coordinate(RootSystemId s, const Weight& mu) {
  const auto cm = cartan_matrix(s);
  // adj(C) for C = [[a,b],[c,d]] is [[d,-b],[-c,a]]; row vector times adj:
  const std::int64_t x_scaled = mu.a * cm.m[1][1] - mu.b * cm.m[1][0];
  const std::int64_t y_scaled = -mu.a * cm.m[0][1] + mu.b * cm.m[0][0];
  if (x_scaled == 0 && y_scaled == 0) return false;
  return x_scaled >= 0 && y_scaled >= 0;
}

// All positive coroot pairings, one per positive root, computed generically:
// every positive root arises as gamma = w(alpha_i); its coroot pairing is
// mu |-> <mu, w(alpha_i^vee)> = <w^{-1}(mu), alpha_i^vee>, i.e. row i of the
// action matrix of w^{-1} (obtained exactly via the integer adjugate).
// Deduplicated and sorted for determinism.
inline std::vector<CorootPairing> compute_positive_coroot_pairings(
    RootSystemId s, const std::vector<WeylGroupElement>& group) {
  std::vector<CorootPairing> out;
  for (const auto& w : group) {
    const std::int64_t det =
        w.action[0][0] * w.action[1][1] - w.action[0][1] * w.action[1][0];
    // Integer inverse of the action matrix (det is +-1 for Weyl elements).
    const std::array<std::array<std::int64_t, 2>, 2> winv{
        {{{w.action[1][1] * det, -w.action[0][1] * det}},
         {{-w.action[1][0] * det, w.action[0][0] * det}}}};
    for (const Color c : {Color::alpha, Color::beta}) {
      if (!is_positive_root_coordinate(s, w.apply(simple_root(s, c)))) continue;
      const int i = static_cast<int>(c);
      out.push_back(CorootPairing{winv[i][0], winv[i][1]});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Weight> compute_positive_roots(
    RootSystemId s, const std::vector<WeylGroupElement>& group) {
  std::vector<Weight> out;
  for (const auto& w : group)
    for (const Color c : {Color::alpha, Color::beta}) {
      const Weight r = w.apply(simple_root(s, c));
      if (is_positive_root_coordinate(s, r)) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Immutable per-system data computed once per process; the pairing list is on
// the hot path of the character division's term order.
struct SystemCache {
  std::vector<WeylGroupElement> group;
  std::vector<CorootPairing> pairings;
  std::vector<Weight> roots;
};

inline const SystemCache& system_cache(RootSystemId s) {
  static const std::array<SystemCache, 4> caches = [] {
    std::array<SystemCache, 4> cs;
    for (const RootSystemId id : kAllSystems) {
      auto& c = cs[static_cast<int>(id)];
      c.group = compute_weyl_group(id);
      c.pairings = compute_positive_coroot_pairings(id, c.group);
      c.roots = compute_positive_roots(id, c.group);
    }
    return cs;
  }();
  return caches[static_cast<int>(s)];
}

}  // namespace detail

// The full Weyl group, deterministically ordered by (length, action matrix).
inline const std::vector<WeylGroupElement>& weyl_group(RootSystemId s) {
  return detail::system_cache(s).group;
}

// One coroot pairing per positive root, deduplicated, deterministic order.
inline const std::vector<CorootPairing>& positive_coroot_pairings(
    RootSystemId s) {
  return detail::system_cache(s).pairings;
}

// The positive roots in weight coordinates (used by the denominator product
// identity).
inline const std::vector<Weight>& positive_roots(RootSystemId s) {
  return detail::system_cache(s).roots;
}

// Twice the pairing of mu with rho^vee: the sum of all positive coroot
// pairings evaluated at mu.  This is the "height" grading used as the primary
// key of the division term order and as the degree of rank generating
// functions.
inline std::int64_t height2(RootSystemId s, const Weight& mu) {
  std::int64_t h = 0;
  for (const auto& p : positive_coroot_pairings(s)) h = checked_add(h, p(mu));
  return h;
}

// ---------------------------------------------------------------------------
// Closed-form rank-generating-function exponent tables
// ---------------------------------------------------------------------------

// A linear form e(a, b) = ka*a + kb*b + k1 over the two dominant coordinates;
// used to tabulate the numerator exponents of the closed-form rank generating
// function per type.
struct LinearForm {
  int ka = 0;
  int kb = 0;
  int k1 = 0;

  std::int64_t operator()(const Lambda2& lam) const {
    return static_cast<std::int64_t>(ka) * lam.a +
           static_cast<std::int64_t>(kb) * lam.b + k1;
  }
};

struct RgfExponents {
  std::vector<LinearForm> numerator;  // exponents of (1 - q^e) upstairs
  std::vector<int> denominator;       // exponents of (1 - q^d) downstairs
};

// Hardcoded per-type table: numerator exponents as linear forms in (a, b),
// denominator exponents as constants.  These duplicate what the generic
// coroot-pairing route computes; the duplication is deliberate — the table is
// the cross-check for the generic machinery, not its source of truth.
inline RgfExponents closed_form_rgf_exponents(RootSystemId s) {
  switch (s) {
    case RootSystemId::A1xA1:
      return {{{1, 0, 1}, {0, 1, 1}}, {1, 1}};
    case RootSystemId::A2:
      return {{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}, {1, 1, 2}};
    case RootSystemId::C2:
      return {{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {1, 2, 3}}, {1, 1, 2, 3}};
    case RootSystemId::G2:
      return {{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}},
              {1, 1, 2, 3, 4, 5}};
  }
  throw std::invalid_argument("weylgrid: invalid RootSystemId");
}

// Product formula for the number of lattice elements (the dimension of the
// character): prod <lambda+rho, gamma^vee> / prod <rho, gamma^vee> over the
// positive coroots.  Exact integer arithmetic with a divisibility assertion.
inline std::int64_t character_dimension(RootSystemId s, const Lambda2& lam) {
  const Weight lr = lam.to_weight() + rho();
  std::int64_t num = 1, den = 1;
  for (const auto& p : positive_coroot_pairings(s)) {
    num = checked_mul(num, p(lr));
    den = checked_mul(den, p(rho()));
  }
  if (den == 0 || num % den != 0)
    throw internal_consistency_error(
        "weylgrid: dimension product is not an integer");
  return num / den;
}

}  // namespace weylgrid
