// bitmask.hpp
// -----------
// A fixed 128-bit set over vertex indices, used both for order ideals of a
// grid poset and for elements of the ideal lattice.  Plain value type with
// total ordering (so collections of masks sort deterministically) and a
// lowercase-hex round trip for serialization.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylgrid {

struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static constexpr int kCapacity = 128;

  static Mask128 empty_set() { return {}; }

  static Mask128 single(int i) {
    Mask128 m;
    m.set(i);
    return m;
  }

  static void check_index(int i) {
    if (i < 0 || i >= kCapacity)
      throw std::out_of_range("weylgrid: Mask128 index out of range");
  }

  bool test(int i) const {
    check_index(i);
    return i < 64 ? ((lo >> i) & 1u) != 0 : ((hi >> (i - 64)) & 1u) != 0;
  }

  void set(int i) {
    check_index(i);
    if (i < 64)
      lo |= std::uint64_t{1} << i;
    else
      hi |= std::uint64_t{1} << (i - 64);
  }

  void reset(int i) {
    check_index(i);
    if (i < 64)
      lo &= ~(std::uint64_t{1} << i);
    else
      hi &= ~(std::uint64_t{1} << (i - 64));
  }

  int count() const { return std::popcount(lo) + std::popcount(hi); }

  bool empty() const { return lo == 0 && hi == 0; }

  bool is_subset_of(const Mask128& o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }

  friend Mask128 operator|(const Mask128& a, const Mask128& b) {
    return {a.lo | b.lo, a.hi | b.hi};
  }

  friend Mask128 operator&(const Mask128& a, const Mask128& b) {
    return {a.lo & b.lo, a.hi & b.hi};
  }

  // Set difference a \ b.
  friend Mask128 operator-(const Mask128& a, const Mask128& b) {
    return {a.lo & ~b.lo, a.hi & ~b.hi};
  }

  friend bool operator==(const Mask128&, const Mask128&) = default;

  // Orders by (hi, lo), i.e. by numeric value of the 128-bit integer.
  friend std::strong_ordering operator<=>(const Mask128& a, const Mask128& b) {
    if (const auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }

  // Calls fn(i) for each set bit, in increasing index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t w = lo; w != 0; w &= w - 1)
      fn(std::countr_zero(w));
    for (std::uint64_t w = hi; w != 0; w &= w - 1)
      fn(64 + std::countr_zero(w));
  }

  // Minimal lowercase hex rendering, "0" for the empty set.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (int nib = 31; nib >= 0; --nib) {
      const std::uint64_t word = nib >= 16 ? hi : lo;
      const int shift = (nib % 16) * 4;
      const unsigned d = static_cast<unsigned>((word >> shift) & 0xF);
      if (!started && d == 0) continue;
      started = true;
      out += digits[d];
    }
    return started ? out : "0";
  }

  static Mask128 from_hex(const std::string& s) {
    if (s.empty() || s.size() > 32)
      throw std::invalid_argument("weylgrid: bad hex mask '" + s + "'");
    Mask128 m;
    for (const char ch : s) {
      unsigned d;
      if (ch >= '0' && ch <= '9')
        d = static_cast<unsigned>(ch - '0');
      else if (ch >= 'a' && ch <= 'f')
        d = static_cast<unsigned>(ch - 'a' + 10);
      else
        throw std::invalid_argument("weylgrid: bad hex mask '" + s + "'");
      m.hi = (m.hi << 4) | (m.lo >> 60);
      m.lo = (m.lo << 4) | d;
    }
    return m;
  }
};

}  // namespace weylgrid
