#pragma once

// Arithmetic in the chain ring Z_{4^s} = Z_{2^{2s}}.
//
// Because the modulus is a power of two, reduction is a mask over the
// wrapping 64-bit product, so every operation is exact for 2s <= 62.

#include "ringcodes/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ringcodes {

inline constexpr unsigned kMaxS = 31;
inline constexpr int kMaxM = 16;
/// Largest m for which the full table of block idempotents is built.
inline constexpr int kMaxTowerRingM = 10;

/// Vectors over Z_{4^s}; the modulus is carried by the surrounding context.
using Digits = std::vector<std::uint64_t>;

/// Parameters (m, s) of the tower Z_{4^s} ⊂ A_{m-1} ⊂ R^{s,m}.
struct RingParams {
  int m = 4;
  int s = 1;

  friend bool operator==(const RingParams&, const RingParams&) = default;

  /// Throws ParameterError unless s in [1, 31] and m even in [4, 16].
  /// m - 1 must be a unit mod 4^s (m even) and m = 2 collapses kappa_2 to zero.
  void validate() const {
    if (s < 1 || s > static_cast<int>(kMaxS))
      throw ParameterError("s must satisfy 1 <= s <= 31 (got s=" + std::to_string(s) + ")");
    if (m < 4 || m % 2 != 0 || m > kMaxM)
      throw ParameterError("m must be even with 4 <= m <= 16 (got m=" + std::to_string(m) +
                           "); m-1 must be a unit mod 4^s and m=2 makes kappa_2 vanish");
  }

  std::size_t subset_dim() const { return std::size_t{1} << (m - 1); }
  /// Rank of R^{s,m} as a free Z_{4^s}-module.
  std::size_t tower_dim() const { return static_cast<std::size_t>(m) * subset_dim(); }
};

/// The ring Z_{2^bits}. Stateless apart from the bit width.
class Zmod {
 public:
  explicit Zmod(unsigned bits) : bits_(bits) {
    if (bits < 1 || bits > 62) throw ParameterError("Zmod bit width must lie in [1, 62]");
    mask_ = (std::uint64_t{1} << bits) - 1;
  }
  static Zmod for_s(unsigned s) {
    if (s < 1 || s > kMaxS) throw ParameterError("s must satisfy 1 <= s <= 31");
    return Zmod(2 * s);
  }

  unsigned bits() const { return bits_; }
  std::uint64_t modulus() const { return mask_ + 1; }
  std::uint64_t mask() const { return mask_; }

  std::uint64_t reduce(std::uint64_t x) const { return x & mask_; }
  /// Reduces a signed integer into [0, modulus).
  std::uint64_t from_signed(std::int64_t x) const { return static_cast<std::uint64_t>(x) & mask_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) & mask_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a - b) & mask_; }
  std::uint64_t neg(std::uint64_t a) const { return (0 - a) & mask_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) & mask_; }

  bool is_unit(std::uint64_t a) const { return (a & 1U) != 0; }

  /// 2-adic valuation; `bits()` for zero.
  unsigned valuation(std::uint64_t a) const {
    a &= mask_;
    if (a == 0) return bits_;
    return static_cast<unsigned>(std::countr_zero(a));
  }

  /// Inverse of an odd residue by Newton iteration y <- y(2 - xy).
  std::uint64_t inv(std::uint64_t a) const {
    a &= mask_;
    if (!is_unit(a))
      throw NotAUnitError(std::to_string(a) + " is not a unit modulo " + std::to_string(modulus()));
    std::uint64_t y = a;  // correct to 3 bits since a*a = 1 mod 8
    for (int i = 0; i < 5; ++i) y *= 2 - a * y;
    return y & mask_;
  }

  std::uint64_t lee(std::uint64_t a) const {
    a &= mask_;
    const std::uint64_t other = modulus() - a;
    return a < other ? a : other;
  }

  friend bool operator==(const Zmod&, const Zmod&) = default;

 private:
  unsigned bits_;
  std::uint64_t mask_ = 0;
};

inline std::uint64_t lee_weight(const Zmod& zm, const Digits& v) {
  std::uint64_t w = 0;
  for (auto x : v) w += zm.lee(x);
  return w;
}

inline std::size_t hamming_weight(const Digits& v) {
  std::size_t w = 0;
  for (auto x : v) w += (x != 0);
  return w;
}

/// An element of Z_{4^s}. The exponent s travels with the value so that
/// mixing residues of different moduli is reported rather than silently wrapped.
class Residue {
 public:
  Residue(std::int64_t value, unsigned s) : s_(s), value_(Zmod::for_s(s).from_signed(value)) {}

  std::uint64_t value() const { return value_; }
  unsigned s() const { return s_; }
  Zmod ring() const { return Zmod::for_s(s_); }

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(const Residue& x, const Residue& y) {
    check_same(x, y);
    return from_raw(x.ring().add(x.value_, y.value_), x.s_);
  }
  friend Residue operator-(const Residue& x, const Residue& y) {
    check_same(x, y);
    return from_raw(x.ring().sub(x.value_, y.value_), x.s_);
  }
  friend Residue operator*(const Residue& x, const Residue& y) {
    check_same(x, y);
    return from_raw(x.ring().mul(x.value_, y.value_), x.s_);
  }
  Residue operator-() const { return from_raw(ring().neg(value_), s_); }

 private:
  static Residue from_raw(std::uint64_t v, unsigned s) { return Residue(static_cast<std::int64_t>(v), s); }
  static void check_same(const Residue& x, const Residue& y) {
    if (x.s_ != y.s_)
      throw ContextError("residue modulus mismatch: 4^" + std::to_string(x.s_) + " vs 4^" +
                         std::to_string(y.s_));
  }

  unsigned s_;
  std::uint64_t value_;
};

inline Residue inv_unit(const Residue& x) {
  return Residue(static_cast<std::int64_t>(x.ring().inv(x.value())), x.s());
}

inline std::uint64_t lee_weight(const Residue& x) { return x.ring().lee(x.value()); }

}  // namespace ringcodes
