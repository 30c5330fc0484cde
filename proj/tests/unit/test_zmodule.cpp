#include "oracles/brute_force.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ringcodes;

namespace {

struct Case {
  Zmod zm;
  std::size_t n;
  std::vector<Digits> rows;
};

Case random_case(std::mt19937_64& rng) {
  const unsigned s = 1 + static_cast<unsigned>(rng() % 2);
  const std::size_t n = 1 + rng() % (s == 1 ? 4 : 3);
  const std::size_t r = rng() % 4;
  Case c{Zmod::for_s(s), n, {}};
  for (std::size_t i = 0; i < r; ++i) {
    Digits row(n);
    // bias toward non-units so that non-trivial Howell pivots appear
    for (auto& x : row) x = (rng() % 3 == 0) ? c.zm.reduce(rng()) : c.zm.reduce(rng() << 1);
    c.rows.push_back(row);
  }
  return c;
}

}  // namespace

TEST(Howell, CardinalityAndMembershipMatchEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Case c = random_case(rng);
    const ZModMatrix M = ZModMatrix::from_rows(c.zm, c.n, c.rows);
    const auto truth = oracle::span(c.rows, c.n, c.zm.modulus());
    const RowSpan span(M);
    ASSERT_EQ(span.cardinality(), BigInt(truth.size())) << t;
    oracle::for_each_vector(c.n, c.zm.modulus(), [&](const oracle::Vec& v) {
      EXPECT_EQ(span.contains(v), truth.count(v) == 1);
      EXPECT_EQ(is_member(v, M), truth.count(v) == 1);
    });
  }
}

TEST(Howell, DualMatchesOrthogonalEnumeration) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Case c = random_case(rng);
    const ZModMatrix M = ZModMatrix::from_rows(c.zm, c.n, c.rows);
    const auto truth = oracle::orthogonal(c.rows, c.n, c.zm.modulus());
    const ZModMatrix D = dual_generators(M, c.n);
    const auto dual = oracle::span(D.to_rows(), c.n, c.zm.modulus());
    EXPECT_EQ(dual, truth) << t;
  }
}

TEST(Howell, EnumerationVisitsSpanOnce) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Case c = random_case(rng);
    const RowSpan span(ZModMatrix::from_rows(c.zm, c.n, c.rows));
    std::multiset<Digits> seen;
    span.for_each([&](const Digits& v) { seen.insert(v); });
    const auto truth = oracle::span(c.rows, c.n, c.zm.modulus());
    EXPECT_EQ(std::set<Digits>(seen.begin(), seen.end()), truth);
    EXPECT_EQ(seen.size(), truth.size());

    // chunked ranges cover the same elements
    const auto total = static_cast<std::uint64_t>(span.cardinality());
    std::set<Digits> chunked;
    for (std::uint64_t first = 0; first < total; first += 3)
      span.for_each_in_range(first, std::min<std::uint64_t>(3, total - first), [&](const Digits& v) { chunked.insert(v); });
    EXPECT_EQ(chunked, truth);
    for (std::uint64_t i = 0; i < total; ++i) EXPECT_EQ(truth.count(span.element(i)), 1U);
  }
}

TEST(Howell, LeftKernelAnnihilates) {
  std::mt19937_64 rng(24);
  const Zmod zm = Zmod::for_s(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    ZModMatrix A(zm, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A.at(i, j) = zm.reduce(rng() << (rng() % 3));
    const ZModMatrix K = left_kernel(A);
    for (std::size_t k = 0; k < K.rows(); ++k)
      for (std::size_t j = 0; j < c; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < r; ++i) acc = zm.add(acc, zm.mul(K.at(k, i), A.at(i, j)));
        EXPECT_EQ(acc, 0U);
      }
    // and it is the whole kernel
    std::vector<Digits> cols;
    for (std::size_t j = 0; j < c; ++j) {
      Digits col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = A.at(i, j);
      cols.push_back(col);
    }
    EXPECT_EQ(span_cardinality(K), BigInt(oracle::orthogonal(cols, r, 16).size()));
  }
}

TEST(Howell, KnownForms) {
  const Zmod z4 = Zmod::for_s(1);
  // [2 2] over Z4 has span {00, 22}
  EXPECT_EQ(span_cardinality(ZModMatrix::from_rows(z4, 2, {{2, 2}})), BigInt(2));
  // [[1,1]] dual is [[1,3]]
  const ZModMatrix D = dual_generators(ZModMatrix::from_rows(z4, 2, {{1, 1}}), 2);
  EXPECT_EQ(D.to_rows(), (std::vector<Digits>{{1, 3}}));
  // empty matrix: dual is everything
  EXPECT_EQ(span_cardinality(dual_generators(ZModMatrix(z4, 3), 3)), BigInt(64));
  EXPECT_EQ(howell_form(ZModMatrix::from_rows(z4, 2, {{0, 0}})).rows(), 0U);
}

TEST(ZModMatrix, Errors) {
  ZModMatrix M(Zmod::for_s(1), 3);
  EXPECT_THROW(M.append_row(Digits{1, 2}), DimensionError);
  EXPECT_THROW(M.append_rows(ZModMatrix(Zmod::for_s(2), 3)), ContextError);
  EXPECT_THROW(dual_generators(M, 4), DimensionError);
  EXPECT_THROW(RowSpan(M).contains(Digits{1}), DimensionError);
}
