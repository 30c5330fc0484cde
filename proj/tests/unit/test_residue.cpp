#include "oracles/brute_force.hpp"
#include "ringcodes/residue.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ringcodes;

TEST(Zmod, OperationsMatchModularArithmetic) {
  std::mt19937_64 rng(11);
  for (unsigned s : {1U, 2U, 5U, 16U, 31U}) {
    const Zmod zm = Zmod::for_s(s);
    const unsigned __int128 q = static_cast<unsigned __int128>(1) << (2 * s);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t a = zm.reduce(rng()), b = zm.reduce(rng());
      EXPECT_EQ(zm.add(a, b), static_cast<std::uint64_t>((a + static_cast<unsigned __int128>(b)) % q));
      EXPECT_EQ(zm.sub(a, b), static_cast<std::uint64_t>((a + q - b) % q));
      EXPECT_EQ(zm.mul(a, b), static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q));
      EXPECT_EQ(zm.add(a, zm.neg(a)), 0U);
    }
  }
}

TEST(Zmod, InverseOfEveryUnit) {
  for (unsigned s : {1U, 2U, 3U}) {
    const Zmod zm = Zmod::for_s(s);
    for (std::uint64_t a = 0; a < zm.modulus(); ++a) {
      if (a % 2 == 1) {
        EXPECT_EQ(zm.mul(a, zm.inv(a)), 1U) << a;
      } else {
        EXPECT_THROW(zm.inv(a), NotAUnitError);
      }
    }
  }
  std::mt19937_64 rng(5);
  const Zmod big = Zmod::for_s(31);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = big.reduce(rng()) | 1U;
    EXPECT_EQ(big.mul(a, big.inv(a)), 1U);
  }
}

TEST(Zmod, LeeWeightMatchesOracle) {
  EXPECT_EQ(Zmod::for_s(1).lee(0), 0U);
  EXPECT_EQ(Zmod::for_s(1).lee(1), 1U);
  EXPECT_EQ(Zmod::for_s(1).lee(2), 2U);
  EXPECT_EQ(Zmod::for_s(1).lee(3), 1U);
  EXPECT_EQ(Zmod::for_s(2).lee(9), 7U);
  for (unsigned s : {1U, 2U, 3U}) {
    const Zmod zm = Zmod::for_s(s);
    for (std::uint64_t a = 0; a < zm.modulus(); ++a) EXPECT_EQ(zm.lee(a), oracle::lee(a, zm.modulus()));
  }
  EXPECT_EQ(lee_weight(Zmod::for_s(1), Digits{1, 2, 3, 0}), 4U);
  EXPECT_EQ(hamming_weight(Digits{1, 0, 3, 0}), 2U);
}

TEST(Zmod, Valuation) {
  const Zmod zm = Zmod::for_s(2);
  EXPECT_EQ(zm.valuation(0), 4U);
  EXPECT_EQ(zm.valuation(1), 0U);
  EXPECT_EQ(zm.valuation(12), 2U);
  EXPECT_EQ(zm.valuation(8), 3U);
}

TEST(Zmod, RejectsBadWidth) {
  EXPECT_THROW(Zmod(0), ParameterError);
  EXPECT_THROW(Zmod(63), ParameterError);
  EXPECT_THROW(Zmod::for_s(0), ParameterError);
  EXPECT_THROW(Zmod::for_s(32), ParameterError);
}

TEST(Residue, ArithmeticAndModulusMismatch) {
  const Residue a(3, 1), b(2, 1);
  EXPECT_EQ((a + b).value(), 1U);
  EXPECT_EQ((a * b).value(), 2U);
  EXPECT_EQ((a - b).value(), 1U);
  EXPECT_EQ((-a).value(), 1U);
  EXPECT_EQ(Residue(-1, 2).value(), 15U);
  EXPECT_EQ(inv_unit(Residue(3, 2)).value(), 11U);
  EXPECT_THROW(inv_unit(Residue(2, 2)), NotAUnitError);
  EXPECT_EQ(lee_weight(Residue(13, 2)), 3U);
  EXPECT_THROW(a + Residue(1, 2), ContextError);
  EXPECT_THROW(a * Residue(1, 2), ContextError);
}

TEST(RingParams, Validation) {
  EXPECT_NO_THROW((RingParams{4, 1}.validate()));
  EXPECT_NO_THROW((RingParams{16, 31}.validate()));
  EXPECT_THROW((RingParams{2, 1}.validate()), ParameterError);
  EXPECT_THROW((RingParams{5, 1}.validate()), ParameterError);
  EXPECT_THROW((RingParams{18, 1}.validate()), ParameterError);
  EXPECT_THROW((RingParams{4, 0}.validate()), ParameterError);
  EXPECT_THROW((RingParams{4, 32}.validate()), ParameterError);
  EXPECT_EQ((RingParams{4, 1}.tower_dim()), 32U);
  EXPECT_EQ((RingParams{6, 1}.subset_dim()), 32U);
}
