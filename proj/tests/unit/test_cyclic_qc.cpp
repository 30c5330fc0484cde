#include "oracles/brute_force.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace ringcodes;
using testutil::tower;

namespace {

const RingParams P41{4, 1};

APoly aconst(const SubsetPoly& a, std::size_t n) { return APoly::constant(a, n); }
SubsetPoly one3() { return SubsetPoly::constant(3, 1, 1); }
SubsetPoly zero3() { return SubsetPoly(3, 1); }

}  // namespace

TEST(QuotientPoly, Basics) {
  const TowerElement one = TowerElement::one(P41);
  const RPoly x = RPoly::monomial(one, 1, 5), x4 = RPoly::monomial(one, 4, 5);
  EXPECT_EQ(x * x4, RPoly::constant(one, 5));
  std::mt19937_64 rng(61);
  std::vector<TowerElement> c;
  for (int i = 0; i < 5; ++i) c.push_back(testutil::random_tower(P41, rng));
  const RPoly f(c);
  EXPECT_EQ(f * RPoly::constant(one, 5), f);
  EXPECT_THROW(RPoly(std::vector<TowerElement>{}), ParameterError);
  EXPECT_THROW(f * RPoly::constant(one, 4), DimensionError);
}

TEST(QuotientPoly, KappaSquareExample) {
  const auto ring = tower(4, 1);
  const auto& ks = ring->kappas();
  RPoly f = RPoly::constant(ks.k1, 3);
  f[1] = ks.k2;
  RPoly expect = RPoly::constant(ks.k1, 3);
  expect[2] = ks.k2;
  EXPECT_EQ(f * f, expect);
}

TEST(QuotientPoly, ConvolutionMatchesOracle) {
  // Z_4[x]/(x^n - 1) with A_0 coefficients, against a direct double loop
  std::mt19937_64 rng(62);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Residue> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      a.emplace_back(static_cast<std::int64_t>(rng() % 16), 2);
      b.emplace_back(static_cast<std::int64_t>(rng() % 16), 2);
    }
    const auto c = QuotientPoly<Residue>(a) * QuotientPoly<Residue>(b);
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += a[i].value() * b[(k + n - i) % n].value();
      EXPECT_EQ(c[k].value(), acc % 16);
    }
  }
}

TEST(Tau, Examples) {
  const auto ring = tower(4, 1);
  const APoly one = aconst(one3(), 1), zero = aconst(zero3(), 1);
  EXPECT_EQ(tau_build(*ring, one, one, one), RPoly::constant(TowerElement::one(P41), 1));
  EXPECT_TRUE(tau_build(*ring, aconst(eta(3, 1, 7), 1), zero, zero).is_zero());
  const RPoly t = tau_build(*ring, one, one, aconst(SubsetPoly::variable(3, 1, 1), 1));
  EXPECT_TRUE(is_idempotent(t));
}

TEST(Tau, NonIdempotentInputIsRejected) {
  const auto ring = tower(4, 1);
  const APoly one = aconst(one3(), 3);
  const APoly bad = aconst(SubsetPoly::constant(3, 1, 2), 3);
  try {
    (void)tau_build(*ring, one, bad, one);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("e2"), std::string::npos) << e.what();
  }
}

TEST(Tau, ForwardDirectionAllChoices) {
  const auto ring = tower(4, 1);
  for (std::size_t n : {1U, 3U, 7U}) {
    const auto choices = tau_choices(3, 1, n);
    ASSERT_EQ(choices.size(), 10U);
    for (const auto& a : choices)
      for (const auto& b : choices)
        for (const auto& c : choices) ASSERT_TRUE(is_idempotent(tau_compose(*ring, a, b, c)));
  }
}

TEST(Tau, ConverseFailsOnlyThroughTheEmptySetPoint) {
  // a = 2 v_1 is not idempotent (a^2 - a = 2 v_1), but kappa_1 and kappa_2
  // contain eta_{} which kills v_1, so tau stays idempotent in slots 1 and 2.
  const auto ring = tower(4, 1);
  const APoly one = aconst(one3(), 1);
  const APoly bad = aconst(SubsetPoly::monomial(3, 1, 1, 2), 1);
  ASSERT_FALSE(is_idempotent(bad));
  EXPECT_TRUE(is_idempotent(tau_compose(*ring, bad, one, one)));
  EXPECT_TRUE(is_idempotent(tau_compose(*ring, one, bad, one)));
  EXPECT_FALSE(is_idempotent(tau_compose(*ring, one, one, bad)));
}

TEST(Tau, ConverseCensusAtM4S1) {
  const ConverseCensus c = tau_converse_census(*tower(4, 1));
  // 2^16 elements, of which 2^8 are idempotent (each of 8 points is 0 or 1)
  EXPECT_EQ(c.non_idempotents, 65536U - 256U);
  // slot l keeps tau idempotent iff (a^2 - a) vanishes at the empty-set point
  std::uint64_t expected = 0;
  for (std::uint64_t idx = 0; idx < 65536; ++idx) {
    oracle::Vec a(8);
    for (std::size_t S = 0; S < 8; ++S) a[S] = (idx >> (2 * S)) & 3;
    const auto sq = oracle::subset_mul(a, a, 4);
    bool idem = true;
    for (std::size_t S = 0; S < 8; ++S) idem = idem && sq[S] == a[S];
    const std::uint64_t at0 = a[0];
    if (!idem && (at0 * at0) % 4 == at0) ++expected;
  }
  EXPECT_EQ(c.tau_still_idempotent[0], expected);
  EXPECT_EQ(c.tau_still_idempotent[1], expected);
  EXPECT_EQ(c.tau_still_idempotent[2], 0U);
  EXPECT_EQ(expected, 32512U);
}

TEST(Tau, AuditReportsConverseAsDiscrepancy) {
  const AuditReport rep = tau_idempotence_audit(*tower(4, 1));
  EXPECT_EQ(rep.find("tau.forward")->status, Status::pass);
  EXPECT_EQ(rep.find("tau.converse_census")->status, Status::measured_discrepancy);
  EXPECT_TRUE(rep.no_failures());
  EXPECT_EQ(rep.to_json(), tau_idempotence_audit(*tower(4, 1)).to_json());
}

TEST(LiftIdempotent, BinaryIdempotentLiftsToZ4) {
  // 1 + x + x^2 + x^4 is idempotent mod 2 in F2[x]/(x^7 - 1)
  std::vector<Residue> c(7, Residue(0, 1));
  for (std::size_t i : {0U, 1U, 2U, 4U}) c[i] = Residue(1, 1);
  const QuotientPoly<Residue> e(c);
  const auto lifted = lift_idempotent(e);
  EXPECT_TRUE(is_idempotent(lifted));
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(lifted[i].value() % 2, c[i].value());
  // x is not idempotent mod 2
  EXPECT_THROW(lift_idempotent(QuotientPoly<Residue>::monomial(Residue(1, 1), 1, 7)), PreconditionError);
}

TEST(Shift, Examples) {
  const std::vector<int> w{1, 2, 3};
  EXPECT_EQ(cyclic_shift(w, 1), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(cyclic_shift(w, 3), w);
  EXPECT_EQ(cyclic_shift(cyclic_shift(w, 1), 2), w);
  EXPECT_THROW(cyclic_shift(w, 0), ParameterError);
  EXPECT_EQ(shift_digits({1, 2, 3, 4}, 2, 1), (Digits{3, 4, 1, 2}));
  EXPECT_THROW(shift_digits({1, 2, 3}, 2, 1), DimensionError);
}

TEST(QcCheck, Examples) {
  const Zmod z4 = Zmod::for_s(1);
  EXPECT_TRUE(qc_invariance_check(DigitCode(2, 1, ZModMatrix::from_rows(z4, 2, {{3, 3}})), 1).all_pass());
  EXPECT_FALSE(qc_invariance_check(DigitCode(2, 1, ZModMatrix::from_rows(z4, 2, {{1, 0}})), 1).all_pass());
  EXPECT_THROW(qc_invariance_check(DigitCode(3, 1, ZModMatrix::from_rows(z4, 3, {{1, 0, 0}})), 2), ParameterError);
}

TEST(QcCheck, TauIdealCodesAtLengthSeven) {
  const auto ring = tower(4, 1);
  const auto choices = tau_choices(3, 1, 7);
  const RPoly tau = tau_build(*ring, choices[2], choices[1], choices[5]);
  const DigitCode code = ideal_code(tau);
  EXPECT_TRUE(qc_invariance_check(code, 1).all_pass());
  // tau acts as identity on its ideal
  EXPECT_TRUE(code.contains(tau.digits()));
  EXPECT_TRUE(code.contains((tau * tau).digits()));
}

TEST(QcCheck, FromGenerators) {
  const Residue one(1, 1), zero(0, 1);
  const QuotientPoly<Residue> g1(std::vector<Residue>{one, zero, zero, zero});
  const QuotientPoly<Residue> g2(std::vector<Residue>{zero, one, zero, zero});
  const DigitCode code = qc_from_generators(std::vector{g1, g2}, 2);
  EXPECT_TRUE(qc_invariance_check(code, 2).all_pass());
  EXPECT_EQ(code.cardinality(), BigInt(256));
  const DigitCode single = qc_from_generators(std::vector{g1}, 4);
  EXPECT_EQ(single.cardinality(), BigInt(4));
  EXPECT_THROW(qc_from_generators(std::vector{g1}, 3), ParameterError);
  EXPECT_THROW(qc_from_generators(std::vector<QuotientPoly<Residue>>{}, 1), ParameterError);
}

TEST(QcCheck, RandomGeneratorsOverTheTower) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 5; ++t) {
    const std::size_t n = 4;
    std::vector<RPoly> gs;
    for (int g = 0; g < 2; ++g) {
      std::vector<TowerElement> c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(testutil::random_tower(P41, rng));
      gs.emplace_back(c);
    }
    const DigitCode code = qc_from_generators(gs, 2);
    EXPECT_TRUE(qc_invariance_check(code, 2).all_pass());
  }
}
