// qseries.hpp
// -----------
// Dense integer polynomials in one variable q (coefficient index = exponent),
// exact division, the symmetric/unimodal predicates, and the closed-form rank
// generating functions attached to each root system and dominant weight:
// products of cyclotomic-style factors (1-q^e) determined by evaluating
// positive-coroot pairings at lambda+rho and at rho.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylgrid/core.hpp"
#include "weylgrid/rootsys.hpp"

namespace weylgrid {

// A polynomial in q with int64 coefficients, coefficients[k] = coeff of q^k.
// Invariant: no trailing zeros (the zero polynomial has an empty vector).
struct QPolynomial {
  std::vector<std::int64_t> coefficients;

  static QPolynomial zero() { return {}; }

  static QPolynomial one() { return monomial(0); }

  // c * q^k
  static QPolynomial monomial(std::int64_t k, std::int64_t c = 1) {
    if (k < 0) throw std::invalid_argument("weylgrid: negative q-exponent");
    QPolynomial p;
    if (c != 0) {
      p.coefficients.assign(static_cast<std::size_t>(k) + 1, 0);
      p.coefficients.back() = c;
    }
    return p;
  }

  // 1 - q^e, the basic factor of every closed form here.
  static QPolynomial one_minus_q_pow(std::int64_t e) {
    if (e <= 0) throw std::invalid_argument("weylgrid: factor exponent <= 0");
    QPolynomial p = monomial(e, -1);
    p.coefficients[0] = 1;
    return p;
  }

  bool is_zero() const { return coefficients.empty(); }

  // Degree of the zero polynomial is -1 by convention.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coefficients.size()) - 1;
  }

  std::int64_t coefficient(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(coefficients.size())) return 0;
    return coefficients[static_cast<std::size_t>(k)];
  }

  void normalize() {
    while (!coefficients.empty() && coefficients.back() == 0)
      coefficients.pop_back();
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  friend QPolynomial operator+(const QPolynomial& x, const QPolynomial& y) {
    QPolynomial r;
    r.coefficients.resize(
        std::max(x.coefficients.size(), y.coefficients.size()), 0);
    for (std::size_t k = 0; k < r.coefficients.size(); ++k)
      r.coefficients[k] =
          checked_add(k < x.coefficients.size() ? x.coefficients[k] : 0,
                      k < y.coefficients.size() ? y.coefficients[k] : 0);
    r.normalize();
    return r;
  }

  friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    QPolynomial r;
    r.coefficients.assign(x.coefficients.size() + y.coefficients.size() - 1,
                          0);
    for (std::size_t i = 0; i < x.coefficients.size(); ++i) {
      if (x.coefficients[i] == 0) continue;
      for (std::size_t j = 0; j < y.coefficients.size(); ++j)
        r.coefficients[i + j] = checked_add(
            r.coefficients[i + j],
            checked_mul(x.coefficients[i], y.coefficients[j]));
    }
    r.normalize();
    return r;
  }

  std::int64_t evaluate_at_one() const {
    std::int64_t s = 0;
    for (const std::int64_t c : coefficients) s = checked_add(s, c);
    return s;
  }

  // Palindromic coefficient vector?
  bool is_symmetric() const {
    const auto n = coefficients.size();
    for (std::size_t k = 0; 2 * k < n; ++k)
      if (coefficients[k] != coefficients[n - 1 - k]) return false;
    return true;
  }

  // Weakly increasing then weakly decreasing?
  bool is_unimodal() const {
    std::size_t k = 1;
    const auto n = coefficients.size();
    while (k < n && coefficients[k - 1] <= coefficients[k]) ++k;
    while (k < n && coefficients[k - 1] >= coefficients[k]) ++k;
    return k >= n;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      const std::int64_t c = coefficients[k];
      if (c == 0) continue;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const std::int64_t mag = c < 0 ? -c : c;
      if (mag != 1 || k == 0) out += std::to_string(mag);
      if (k == 1) out += "q";
      if (k > 1) out += "q^" + std::to_string(k);
    }
    return out;
  }
};

// Exact polynomial division: returns x / y, throwing if y is zero or the
// remainder is nonzero.  Classical long division from the top coefficient.
inline QPolynomial exact_divide(const QPolynomial& x, const QPolynomial& y) {
  if (y.is_zero())
    throw std::invalid_argument("weylgrid: polynomial division by zero");
  if (x.is_zero()) return {};
  if (x.coefficients.size() < y.coefficients.size())
    throw std::domain_error("weylgrid: polynomial division leaves a remainder");

  QPolynomial rem = x;
  QPolynomial quo;
  quo.coefficients.assign(x.coefficients.size() - y.coefficients.size() + 1,
                          0);
  const std::int64_t ylead = y.coefficients.back();
  while (!rem.is_zero() && rem.coefficients.size() >= y.coefficients.size()) {
    const std::int64_t rlead = rem.coefficients.back();
    if (rlead % ylead != 0)
      throw std::domain_error(
          "weylgrid: polynomial division leaves a remainder");
    const std::int64_t c = rlead / ylead;
    const std::size_t shift = rem.coefficients.size() - y.coefficients.size();
    quo.coefficients[shift] = c;
    for (std::size_t j = 0; j < y.coefficients.size(); ++j)
      rem.coefficients[shift + j] = checked_sub(
          rem.coefficients[shift + j], checked_mul(c, y.coefficients[j]));
    rem.normalize();
  }
  if (!rem.is_zero())
    throw std::domain_error("weylgrid: polynomial division leaves a remainder");
  quo.normalize();
  return quo;
}

// ---------------------------------------------------------------------------
// Closed-form rank generating functions
// ---------------------------------------------------------------------------

// The closed form prod_k (1-q^{n_k(lambda)}) / prod_k (1-q^{d_k}) from the
// per-system exponent tables, expanded to an explicit polynomial.
inline QPolynomial closed_form_rgf(RootSystemId s, const Lambda2& lam) {
  const RgfExponents& exps = closed_form_rgf_exponents(s);
  QPolynomial num = QPolynomial::one();
  for (const LinearForm& form : exps.numerator)
    num = num * QPolynomial::one_minus_q_pow(form(lam));
  QPolynomial den = QPolynomial::one();
  for (const int e : exps.denominator)
    den = den * QPolynomial::one_minus_q_pow(e);
  return exact_divide(num, den);
}

// A human-readable factored rendering of the same closed form, e.g.
// "(1-q^2)(1-q^3)/((1-q)(1-q^2))".  Deterministic: factors in table order.
inline std::string closed_form_rgf_factored(RootSystemId s,
                                            const Lambda2& lam) {
  const RgfExponents& exps = closed_form_rgf_exponents(s);
  const auto factor = [](std::int64_t e) {
    return e == 1 ? std::string("(1-q)") : "(1-q^" + std::to_string(e) + ")";
  };
  std::string num, den;
  for (const LinearForm& form : exps.numerator) num += factor(form(lam));
  for (const int e : exps.denominator) den += factor(e);
  return num + "/(" + den + ")";
}

// The same quotient built from the generic machinery instead of the tables:
// numerator exponents are the positive-coroot pairings evaluated at
// lambda+rho, denominator exponents the pairings at rho.  Kept separate so
// tests can compare the two routes.
inline QPolynomial product_formula_rgf(RootSystemId s, const Lambda2& lam) {
  const Weight lam_rho = lam.to_weight() + rho();
  QPolynomial num = QPolynomial::one();
  QPolynomial den = QPolynomial::one();
  for (const CorootPairing& p : positive_coroot_pairings(s)) {
    num = num * QPolynomial::one_minus_q_pow(p(lam_rho));
    den = den * QPolynomial::one_minus_q_pow(p(rho()));
  }
  return exact_divide(num, den);
}

}  // namespace weylgrid
