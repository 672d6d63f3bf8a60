// core.hpp
// --------
// Shared value types for the weylgrid library: edge/vertex colors, the four
// rank-two root system tags, weights in fundamental-weight coordinates,
// dominant weight pairs, overflow-checked 64-bit arithmetic, and the uniform
// check-report structure used by every verifier in the library.
//
// Everything in weylgrid is exact integer arithmetic; there is no floating
// point anywhere in the core.
#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylgrid {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Thrown when a configurable resource cap (element count, wall-clock budget)
// would be exceeded.  Callers that need graceful degradation (the verification
// pipeline, the CLI) catch this and report "skipped" rather than failing.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a construction that is supposed to be correct by design fails
// its own post-hoc certification.  Seeing this means a bug in the library,
// not bad user input.
struct internal_consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Overflow-checked 64-bit arithmetic
// ---------------------------------------------------------------------------

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("weylgrid: 64-bit addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("weylgrid: 64-bit subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("weylgrid: 64-bit multiplication overflow");
  return r;
}

// ---------------------------------------------------------------------------
// Colors and root system tags
// ---------------------------------------------------------------------------

// The two vertex/edge colors.  By convention `alpha` is the color attached to
// the short simple root and `beta` to the other simple root.
enum class Color : std::uint8_t { alpha = 0, beta = 1 };

inline Color other(Color c) {
  return c == Color::alpha ? Color::beta : Color::alpha;
}

inline std::string to_string(Color c) {
  return c == Color::alpha ? "alpha" : "beta";
}

inline Color color_from_string(std::string_view s) {
  if (s == "alpha") return Color::alpha;
  if (s == "beta") return Color::beta;
  throw std::invalid_argument("weylgrid: unknown color \"" + std::string(s) +
                              "\" (expected \"alpha\" or \"beta\")");
}

// The four rank-two root systems.
enum class RootSystemId : std::uint8_t { A1xA1 = 0, A2 = 1, C2 = 2, G2 = 3 };

inline constexpr RootSystemId kAllSystems[] = {
    RootSystemId::A1xA1, RootSystemId::A2, RootSystemId::C2, RootSystemId::G2};

inline std::string to_string(RootSystemId s) {
  switch (s) {
    case RootSystemId::A1xA1: return "A1xA1";
    case RootSystemId::A2: return "A2";
    case RootSystemId::C2: return "C2";
    case RootSystemId::G2: return "G2";
  }
  throw std::invalid_argument("weylgrid: invalid RootSystemId");
}

inline RootSystemId system_from_string(std::string_view s) {
  if (s == "A1xA1") return RootSystemId::A1xA1;
  if (s == "A2") return RootSystemId::A2;
  if (s == "C2") return RootSystemId::C2;
  if (s == "G2") return RootSystemId::G2;
  throw std::invalid_argument("weylgrid: unknown root system \"" +
                              std::string(s) +
                              "\" (expected A1xA1, A2, C2 or G2)");
}

// Which fundamental building block goes at the bottom of a two-parameter
// poset: `beta_alpha` stacks the beta-type blocks below the alpha-type
// blocks, `alpha_beta` the other way around.
enum class FundamentalOrder : std::uint8_t { beta_alpha = 0, alpha_beta = 1 };

inline constexpr FundamentalOrder kBothOrders[] = {FundamentalOrder::beta_alpha,
                                                   FundamentalOrder::alpha_beta};

inline std::string to_string(FundamentalOrder o) {
  return o == FundamentalOrder::beta_alpha ? "beta_alpha" : "alpha_beta";
}

inline FundamentalOrder order_from_string(std::string_view s) {
  if (s == "beta_alpha" || s == "ba") return FundamentalOrder::beta_alpha;
  if (s == "alpha_beta" || s == "ab") return FundamentalOrder::alpha_beta;
  throw std::invalid_argument("weylgrid: unknown order \"" + std::string(s) +
                              "\" (expected ba/beta_alpha or ab/alpha_beta)");
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

// An integral weight in fundamental-weight coordinates: w = a*omega_alpha +
// b*omega_beta.  The coordinates are exactly the pairings with the simple
// coroots: a = <w, alpha^vee>, b = <w, beta^vee>.
struct Weight {
  std::int64_t a = 0;  // coefficient of omega_alpha
  std::int64_t b = 0;  // coefficient of omega_beta

  friend bool operator==(const Weight&, const Weight&) = default;
  // Plain lexicographic order; used for canonical map keys.  The division
  // term order (height-major) lives in groupring.hpp.
  friend auto operator<=>(const Weight&, const Weight&) = default;

  Weight operator+(const Weight& o) const {
    return {checked_add(a, o.a), checked_add(b, o.b)};
  }
  Weight operator-(const Weight& o) const {
    return {checked_sub(a, o.a), checked_sub(b, o.b)};
  }
  Weight operator-() const { return {checked_sub(0, a), checked_sub(0, b)}; }
  Weight operator*(std::int64_t k) const {
    return {checked_mul(a, k), checked_mul(b, k)};
  }

  bool is_dominant() const { return a >= 0 && b >= 0; }

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

// A dominant weight given by its two nonnegative fundamental coordinates.
// `a` counts the alpha-type blocks, `b` the beta-type blocks.
struct Lambda2 {
  int a = 0;
  int b = 0;

  Lambda2() = default;
  Lambda2(int a_, int b_) : a(a_), b(b_) {
    if (a_ < 0 || b_ < 0)
      throw std::invalid_argument(
          "weylgrid: Lambda2 coordinates must be nonnegative, got (" +
          std::to_string(a_) + "," + std::to_string(b_) + ")");
  }

  Weight to_weight() const { return {a, b}; }
  friend bool operator==(const Lambda2&, const Lambda2&) = default;

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

// A cooperative time budget.  Long-running verifiers poll it between work
// units and abort with cap_exceeded once the budget is spent, which callers
// report as a skipped (never silently passed) check.  The default instance
// never expires.  Polling samples the clock only every few hundred calls to
// stay cheap inside tight loops.
struct Deadline {
  std::chrono::steady_clock::time_point at =
      std::chrono::steady_clock::time_point::max();
  mutable unsigned tick = 0;

  static Deadline after_seconds(double s) {
    Deadline d;
    d.at = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(s));
    return d;
  }

  bool expired() const {
    return at != std::chrono::steady_clock::time_point::max() &&
           std::chrono::steady_clock::now() > at;
  }

  void poll(const char* what) const {
    if ((++tick & 255u) != 0) return;
    if (expired())
      throw cap_exceeded(std::string("weylgrid: time budget exhausted in ") +
                         what);
  }
};

// One named axiom/property check with concrete witnesses on failure.
// Witnesses are short human-readable strings naming the offending vertex,
// edge or element; passing checks keep an empty witness list.
struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

// Uniform result of every verifier in the library: a list of named checks.
// A report never throws on a failed check; an invalid object is a value.
// Note the deque: references returned by add() must stay valid while further
// checks are appended, which a vector would not guarantee.
struct Report {
  std::deque<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), true, {}});
    return checks.back();
  }

  // Record a witnessed failure on check `c`, keeping at most `cap` witnesses
  // so reports stay readable on badly broken inputs.
  static void fail(Check& c, std::string witness, std::size_t cap = 8) {
    c.pass = false;
    if (c.witnesses.size() < cap) c.witnesses.push_back(std::move(witness));
  }
};

}  // namespace weylgrid
