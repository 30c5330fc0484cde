#include "oracles/brute_force.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace ringcodes;

namespace {

const RingDescriptor Z4 = RingDescriptor::zq(1);
const RingDescriptor Z16 = RingDescriptor::zq(2);
const RingDescriptor A1 = RingDescriptor::subset(1, 1);

std::vector<std::uint64_t> flat(const Column& c) {
  std::vector<std::uint64_t> out;
  for (const auto& e : c) out.insert(out.end(), e.begin(), e.end());
  return out;
}

std::multiset<std::vector<std::uint64_t>> columns(const LazyGenerator& g) {
  std::multiset<std::vector<std::uint64_t>> out;
  for (BigInt j = 0; j < g.column_count(); ++j) out.insert(flat(g.column(j)));
  return out;
}

}  // namespace

TEST(Ring, ElementIndexRoundTrip) {
  for (const auto& R : {Z4, Z16, A1, RingDescriptor::subset(2, 1)})
    for (BigInt i = 0; i < R.cardinality(); ++i) EXPECT_EQ(R.index_of(R.element(i)), i);
  EXPECT_EQ(RingDescriptor::tower({4, 1}).cardinality(), BigInt(1) << 64);
  EXPECT_THROW(Z4.element(4), ParameterError);
}

TEST(Ring, UnitsMatchInverseSearch) {
  // brute-force units of Z_4[y]/(y^4 - y) with the oracle product: 48 of 256
  std::size_t units = 0;
  for (std::uint64_t i = 0; i < 256; ++i) {
    const Digits a{i & 3, (i >> 2) & 3, (i >> 4) & 3, (i >> 6) & 3};
    for (std::uint64_t j = 0; j < 256; ++j) {
      const Digits b{j & 3, (j >> 2) & 3, (j >> 4) & 3, (j >> 6) & 3};
      if (oracle::tower_mul(a, b, 4, 4) == Digits{1, 0, 0, 0}) {
        ++units;
        break;
      }
    }
  }
  EXPECT_EQ(units, 48U);
  EXPECT_EQ(RingDescriptor::tower({4, 1}).unit_count(), big_pow(48, 8));

  for (const auto& R : {Z4, Z16, A1, RingDescriptor::subset(2, 1)}) {
    std::size_t brute = 0;
    for (BigInt i = 0; i < R.cardinality(); ++i) {
      const Digits a = R.element(i);
      bool unit = false;
      for (BigInt j = 0; j < R.cardinality() && !unit; ++j) unit = R.mul(a, R.element(j)) == R.one();
      EXPECT_EQ(R.is_unit(a), unit) << R.name() << " " << i;
      brute += unit;
    }
    EXPECT_EQ(R.unit_count(), BigInt(brute)) << R.name();
  }
}

TEST(Ring, NonunitRankingEnumeratesNonunitsOnce) {
  for (const auto& R : {Z4, Z16, A1, RingDescriptor::subset(2, 1)}) {
    std::set<Digits> seen;
    for (BigInt i = 0; i < R.nonunit_count(); ++i) {
      const Digits d = R.nonunit(i);
      EXPECT_FALSE(R.is_unit(d));
      seen.insert(d);
    }
    EXPECT_EQ(BigInt(seen.size()), R.nonunit_count());
    EXPECT_EQ(R.nonunit(0), R.zero());
  }
  EXPECT_EQ(Z4.nonunit(1), Digits{2});
  const RingDescriptor T = RingDescriptor::tower({4, 1});
  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    BigInt idx = (BigInt(rng()) << 64 | rng()) % T.nonunit_count();
    EXPECT_FALSE(T.is_unit(T.nonunit(idx)));
  }
}

TEST(Ring, LeeWeightIsGrayOfSubsetZeta) {
  EXPECT_EQ(Z4.lee_weight({3}), 1U);
  // 1 + 2 v_1 evaluates to (1, 3): Lee 2
  EXPECT_EQ(A1.lee_weight({1, 2}), 2U);
  EXPECT_FALSE(RingDescriptor::tower({4, 1}).lee_weight(Digits(32, 0)).has_value());
}

TEST(Ring, Parse) {
  EXPECT_EQ(parse_ring("z4", 1, 4), Z4);
  EXPECT_EQ(parse_ring("z16", 1, 4), Z16);
  EXPECT_EQ(parse_ring("a1", 1, 4), A1);
  EXPECT_EQ(parse_ring("r", 1, 4), RingDescriptor::tower({4, 1}));
  EXPECT_THROW(parse_ring("z8", 1, 4), ParameterError);
  EXPECT_THROW(parse_ring("q", 1, 4), ParameterError);
  EXPECT_THROW(parse_ring("zz", 1, 4), ParameterError);
}

TEST(SimplexAlpha, Z4Small) {
  const auto g1 = simplex_alpha(Z4, 1);
  EXPECT_EQ(g1.materialize(), (std::vector<std::vector<Digits>>{{{0}, {1}, {2}, {3}}}));
  const auto g2 = simplex_alpha(Z4, 2);
  EXPECT_EQ(g2.column_count(), BigInt(16));
  EXPECT_EQ(g2.column(1), (Column{{0}, {1}}));
  EXPECT_EQ(g2.column(4), (Column{{1}, {0}}));
}

TEST(SimplexAlpha, ConstantLeeWeightOverZ4) {
  for (unsigned k : {1U, 2U}) {
    const auto rows = simplex_alpha(Z4, k).materialize();
    const std::size_t len = rows[0].size();
    // every nonzero message, weights computed directly
    const std::uint64_t messages = std::uint64_t{1} << (2 * k);
    for (std::uint64_t x = 1; x < messages; ++x) {
      std::uint64_t lee = 0;
      for (std::size_t j = 0; j < len; ++j) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < k; ++i) v += ((x >> (2 * i)) & 3) * rows[i][j][0];
        lee += oracle::lee(v, 4);
      }
      EXPECT_EQ(lee, std::uint64_t{1} << (2 * k));
    }
    const FamilyStats st = family_stats(simplex_alpha(Z4, k));
    EXPECT_TRUE(st.exhaustive);
    EXPECT_TRUE(st.constant_lee());
    EXPECT_EQ(st.min_lee, std::uint64_t{1} << (2 * k));
  }
}

TEST(SimplexAlpha, StreamIsAllTuplesOnce) {
  for (const auto& R : {Z4, Z16, A1})
    for (unsigned k : {1U, 2U}) {
      const auto cols = columns(simplex_alpha(R, k));
      std::set<std::vector<std::uint64_t>> uniq(cols.begin(), cols.end());
      EXPECT_EQ(uniq.size(), cols.size());
      EXPECT_EQ(BigInt(cols.size()), big_pow(R.cardinality(), k));
    }
}

TEST(SimplexAlpha, TowerColumnCount) {
  EXPECT_EQ(simplex_alpha(RingDescriptor::tower({4, 1}), 1).column_count(), big_pow(4, 32));
}

TEST(SimplexBeta, Z4Columns) {
  const auto g2 = simplex_beta(Z4, 2);
  ASSERT_EQ(g2.column_count(), BigInt(6));
  const std::vector<Column> expect{{{1}, {0}}, {{1}, {1}}, {{1}, {2}}, {{1}, {3}}, {{0}, {1}}, {{2}, {1}}};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(g2.column(j), expect[j]);
  EXPECT_EQ(simplex_beta(Z4, 3).column_count(), BigInt(28));
  EXPECT_EQ(simplex_beta(Z4, 1).materialize(), (std::vector<std::vector<Digits>>{{{1}}}));
}

TEST(SimplexBeta, RecurrenceOnAllRings) {
  for (const auto& R : {Z4, Z16, A1, RingDescriptor::subset(2, 2), RingDescriptor::tower({4, 1}), RingDescriptor::tower({6, 1})}) {
    BigInt prev = 1;
    EXPECT_EQ(simplex_beta(R, 1).column_count(), BigInt(1));
    for (unsigned k = 2; k <= 5; ++k) {
      const BigInt L = simplex_beta(R, k).column_count();
      EXPECT_EQ(L, big_pow(R.cardinality(), k - 1) + R.nonunit_count() * prev) << R.name() << " k=" << k;
      prev = L;
    }
  }
}

TEST(SimplexBeta, ExplicitDivisorSet) {
  const auto g = simplex_beta(Z4, 2, DivisorSet(std::vector<Digits>{Digits{2}}));
  EXPECT_EQ(g.column_count(), BigInt(5));
  EXPECT_EQ(g.column(4), (Column{{2}, {1}}));
}

TEST(MacDonald, AlphaLengthAndPuncturing) {
  for (const auto& R : {Z4, A1})
    for (unsigned k = 2; k <= 3; ++k)
      for (unsigned u = 1; u < k; ++u) {
        const auto mac = macdonald(R, k, u, Family::simplex_alpha);
        EXPECT_EQ(mac.column_count(), big_pow(R.cardinality(), k) - big_pow(R.cardinality(), u));
        if (R.cardinality() > 4 && k == 3) continue;
        // columns of macdonald plus (0^{k-u} | alpha_u) columns = parent multiset
        auto cols = columns(mac);
        const auto inner = simplex_alpha(R, u);
        for (BigInt j = 0; j < inner.column_count(); ++j) {
          Column c(k - u, R.zero());
          const Column tail = inner.column(j);
          c.insert(c.end(), tail.begin(), tail.end());
          cols.insert(flat(c));
        }
        EXPECT_EQ(cols, columns(simplex_alpha(R, k))) << R.name() << " k=" << k << " u=" << u;
      }
  EXPECT_EQ(macdonald(Z4, 2, 1, Family::simplex_alpha).column_count(), BigInt(12));
  EXPECT_EQ(macdonald(RingDescriptor::tower({4, 1}), 2, 1, Family::simplex_alpha).column_count(),
            big_pow(4, 64) - big_pow(4, 32));
}

TEST(MacDonald, BetaPuncturing) {
  for (const auto& R : {Z4, A1})
    for (unsigned k = 2; k <= 3; ++k)
      for (unsigned u = 1; u < k; ++u) {
        auto cols = columns(macdonald(R, k, u, Family::simplex_beta));
        const auto inner = simplex_beta(R, u);
        for (BigInt j = 0; j < inner.column_count(); ++j) {
          Column c(k - u, R.zero());
          const Column tail = inner.column(j);
          c.insert(c.end(), tail.begin(), tail.end());
          cols.insert(flat(c));
        }
        EXPECT_EQ(cols, columns(simplex_beta(R, k))) << R.name() << " k=" << k << " u=" << u;
      }
}

TEST(MacDonald, Errors) {
  EXPECT_THROW(macdonald(Z4, 2, 2, Family::simplex_alpha), ParameterError);
  EXPECT_THROW(macdonald(Z4, 2, 0, Family::simplex_alpha), ParameterError);
  EXPECT_THROW(macdonald(Z4, 2, 1, Family::simplex_beta, DivisorSet(std::vector<Digits>{Digits{2}, Digits{0}})), ParameterError);
  EXPECT_THROW(simplex_alpha(Z4, 0), ParameterError);
  EXPECT_THROW(simplex_alpha(Z4, 1).column(4), ParameterError);
  EXPECT_THROW(simplex_alpha(RingDescriptor::tower({4, 1}), 1).materialize(), ParameterError);
}

TEST(FamilyStats, SamplingNeedsSeed) {
  const auto g = simplex_alpha(Z16, 3);
  FamilyStatsOptions opt;
  opt.budget = 100;
  EXPECT_THROW(family_stats(g, opt), ParameterError);
  opt.seed = 3;
  opt.column_samples = 64;
  opt.message_samples = 32;
  const auto a = family_stats(g, opt), b = family_stats(g, opt);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(LengthAudit, KnownVerdicts) {
  const AuditReport k1 = family_length_audit({4, 1}, 1);
  EXPECT_EQ(k1.find("families.alpha.length.k1")->status, Status::pass);
  EXPECT_EQ(k1.find("families.beta.length.k1")->status, Status::measured_discrepancy);
  const AuditReport k2 = family_length_audit({4, 1}, 2, 1);
  EXPECT_EQ(k2.find("families.alpha.length.k2.u1")->status, Status::pass);
  EXPECT_EQ(k2.find("families.macdonald_alpha.length.k2.u1")->status, Status::pass);
  EXPECT_EQ(k2.to_json(), family_length_audit({4, 1}, 2, 1).to_json());
  EXPECT_TRUE(k2.no_failures());
}

TEST(LengthAudit, MeasuredValuesMatchConstructions) {
  const RingDescriptor R = RingDescriptor::tower({4, 1});
  for (unsigned k = 1; k <= 3; ++k) {
    std::map<std::string, BigRational> measured;
    for (const auto& f : family_length_formulas({4, 1}, k, k > 1 ? std::optional<unsigned>(1) : std::nullopt))
      measured[f.id] = f.measured_value;
    EXPECT_EQ(measured["alpha.length"], BigRational(simplex_alpha(R, k).column_count()));
    EXPECT_EQ(measured["beta.length"], BigRational(simplex_beta(R, k).column_count()));
    EXPECT_EQ(measured["alpha.gray_total_length"], BigRational(24 * simplex_alpha(R, k).column_count()));
    if (k > 1) EXPECT_EQ(measured["macdonald_beta.length"], BigRational(macdonald(R, k, 1, Family::simplex_beta).column_count()));
  }
  EXPECT_THROW(family_length_formulas({4, 1}, 2, 2), ParameterError);
}
