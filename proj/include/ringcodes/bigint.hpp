#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ringcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

/// base^exp for a possibly negative exponent, as an exact rational.
inline BigRational rational_pow(const BigInt& base, std::int64_t exp) {
  if (exp >= 0) return BigRational(big_pow(base, static_cast<std::uint64_t>(exp)));
  return BigRational(BigInt(1), big_pow(base, static_cast<std::uint64_t>(-exp)));
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p" when the rational is an integer, "p/q" otherwise.
inline std::string to_string(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ringcodes
