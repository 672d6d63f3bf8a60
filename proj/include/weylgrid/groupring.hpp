// groupring.hpp
// -------------
// The integral group ring Z[Lambda] of the rank-two weight lattice: finitely
// supported integer combinations of formal exponentials e^mu.  On top of it:
// the Weyl group action, the alternation operator, the Weyl denominator, and
// Weyl characters computed from first principles by exact division of
// alternating sums (iterated leading-term elimination under a height-major
// term order), with the result certified by multiplying back.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylgrid/core.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

// A finitely supported Z-linear combination of exponentials e^mu.  The map
// never stores zero coefficients; keys are ordered lexicographically, which
// makes iteration (and therefore all derived output) deterministic.
struct GroupRingElement {
  std::map<Weight, std::int64_t> terms;

  static GroupRingElement zero() { return {}; }

  static GroupRingElement exponential(const Weight& mu,
                                      std::int64_t coeff = 1) {
    GroupRingElement f;
    if (coeff != 0) f.terms.emplace(mu, coeff);
    return f;
  }

  bool is_zero() const { return terms.empty(); }

  std::int64_t coefficient(const Weight& mu) const {
    const auto it = terms.find(mu);
    return it == terms.end() ? 0 : it->second;
  }

  void add_term(const Weight& mu, std::int64_t coeff) {
    if (coeff == 0) return;
    const auto [it, inserted] = terms.emplace(mu, coeff);
    if (!inserted) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [mu, c] : o.terms) add_term(mu, c);
    return *this;
  }

  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [mu, c] : o.terms) add_term(mu, checked_sub(0, c));
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement x,
                                    const GroupRingElement& y) {
    x += y;
    return x;
  }

  friend GroupRingElement operator-(GroupRingElement x,
                                    const GroupRingElement& y) {
    x -= y;
    return x;
  }

  friend GroupRingElement operator*(const GroupRingElement& x,
                                    const GroupRingElement& y) {
    GroupRingElement r;
    for (const auto& [mu, c] : x.terms)
      for (const auto& [nu, d] : y.terms)
        r.add_term(mu + nu, checked_mul(c, d));
    return r;
  }

  friend GroupRingElement operator*(std::int64_t k, GroupRingElement x) {
    if (k == 0) return {};
    for (auto& [mu, c] : x.terms) c = checked_mul(c, k);
    return x;
  }

  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

  // Sum of all coefficients (the specialization e^mu -> 1).
  std::int64_t evaluate_at_one() const {
    std::int64_t s = 0;
    for (const auto& [mu, c] : terms) s = checked_add(s, c);
    return s;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*e^" + mu.str();
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Weyl group action and alternation
// ---------------------------------------------------------------------------

// w.f = sum_mu f_mu e^{w(mu)}: the action permutes exponents.
inline GroupRingElement act(const WeylGroupElement& w,
                            const GroupRingElement& f) {
  GroupRingElement r;
  for (const auto& [mu, c] : f.terms) r.add_term(w.apply(mu), c);
  return r;
}

// The alternation operator: A(f) = sum_{w in W} det(w) * (w.f).
inline GroupRingElement alternate(RootSystemId s, const GroupRingElement& f) {
  GroupRingElement r;
  for (const auto& w : weyl_group(s))
    for (const auto& [mu, c] : f.terms)
      r.add_term(w.apply(mu), checked_mul(w.det, c));
  return r;
}

// The Weyl denominator A(e^rho) computed by alternation.
inline GroupRingElement weyl_denominator(RootSystemId s) {
  return alternate(s, GroupRingElement::exponential(rho()));
}

// The same element via the product identity e^rho * prod_{gamma>0}
// (1 - e^{-gamma}); kept separate so tests can compare the two routes.
inline GroupRingElement weyl_denominator_product(RootSystemId s) {
  GroupRingElement r = GroupRingElement::exponential(rho());
  for (const Weight& gamma : positive_roots(s)) {
    GroupRingElement factor = GroupRingElement::exponential({0, 0});
    factor.add_term(-gamma, -1);
    r = r * factor;
  }
  return r;
}

// Is f fixed by the whole Weyl group?  Returns a report with the moving
// group element as witness on failure.
inline Report check_w_invariance(RootSystemId s, const GroupRingElement& f) {
  Report rep;
  auto& c = rep.add("w_invariant");
  for (const auto& w : weyl_group(s)) {
    if (act(w, f) == f) continue;
    std::string wit = "moved by element of length " + std::to_string(w.length);
    Report::fail(c, wit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Term order and exact division
// ---------------------------------------------------------------------------

// The division term order: primary key twice-the-height 2<mu, rho^vee>, ties
// broken lexicographically by (a, b).  "Greater" means closer to the leading
// term.
inline bool term_order_less(RootSystemId s, const Weight& x, const Weight& y) {
  const std::int64_t hx = height2(s, x), hy = height2(s, y);
  if (hx != hy) return hx < hy;
  return x < y;  // lexicographic tie-break
}

// The maximal term of a nonzero element under the division term order.
inline std::pair<Weight, std::int64_t> leading_term(RootSystemId s,
                                                    const GroupRingElement& f) {
  if (f.is_zero())
    throw std::invalid_argument("weylgrid: leading term of zero element");
  auto best = f.terms.begin();
  for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
    if (term_order_less(s, best->first, it->first)) best = it;
  return {best->first, best->second};
}

namespace detail {

// Exact quotient A(e^{lambda+rho}) / A(e^rho) by iterated leading-term
// elimination.  Requires the divisor's leading term to be e^rho with
// coefficient 1 (true for Weyl denominators); every step cancels the current
// leading term of the remainder, which strictly decreases in the term order.
// A step bound guards termination for inputs that are not exactly divisible.
inline GroupRingElement divide_alternants(RootSystemId s,
                                          const GroupRingElement& dividend,
                                          const GroupRingElement& divisor) {
  const auto [vlead, vcoeff] = leading_term(s, divisor);
  if (!(vlead == rho()) || vcoeff != 1)
    throw internal_consistency_error(
        "weylgrid: divisor leading term is not e^rho");

  GroupRingElement remainder = dividend;
  GroupRingElement quotient;
  constexpr std::int64_t kStepBound = 10'000'000;
  std::int64_t steps = 0;
  while (!remainder.is_zero()) {
    if (++steps > kStepBound)
      throw internal_consistency_error(
          "weylgrid: alternant division did not terminate (dividend not "
          "divisible?)");
    const auto [mu, c] = leading_term(s, remainder);
    const Weight t = mu - rho();
    quotient.add_term(t, c);
    for (const auto& [nu, d] : divisor.terms)
      remainder.add_term(t + nu, checked_mul(checked_sub(0, c), d));
  }
  return quotient;
}

}  // namespace detail

// The Weyl character chi_lambda = A(e^{lambda+rho}) / A(e^rho), computed by
// exact division and certified by multiplying back.  Memoized per
// (system, lambda); safe for concurrent callers.
inline const GroupRingElement& weyl_character(RootSystemId s,
                                              const Lambda2& lam) {
  static std::map<std::tuple<RootSystemId, int, int>, GroupRingElement> memo;
  static std::mutex memo_mutex;

  const auto key = std::make_tuple(s, lam.a, lam.b);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const GroupRingElement numerator =
      alternate(s, GroupRingElement::exponential(lam.to_weight() + rho()));
  const GroupRingElement denominator = weyl_denominator(s);
  GroupRingElement chi = detail::divide_alternants(s, numerator, denominator);

  // Certification: the quotient must reproduce the numerator exactly.
  if (!(chi * denominator == numerator))
    throw internal_consistency_error(
        "weylgrid: character division failed its multiply-back check");

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key, std::move(chi)).first->second;
}

// dim chi_lambda, by summing coefficients; cross-checked against the coroot
// product formula.
inline std::int64_t weyl_character_dimension(RootSystemId s,
                                             const Lambda2& lam) {
  const std::int64_t by_sum = weyl_character(s, lam).evaluate_at_one();
  if (by_sum != character_dimension(s, lam))
    throw internal_consistency_error(
        "weylgrid: character dimension disagrees with the product formula");
  return by_sum;
}

}  // namespace weylgrid
