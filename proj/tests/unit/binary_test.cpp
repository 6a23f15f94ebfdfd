#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "cyclo/binary.hpp"
#include "cyclo/error.hpp"
#include "cyclo/suites.hpp"

using namespace cyclo;

TEST(Binary, TableMatchesCyclotomicDivision) {
  const auto ps = oracle::primes(3, 61);
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      const std::int64_t p = ps[a], q = ps[b];
      const auto table = build_binary_table(p, q);
      const auto& phi = oracle::cyclotomic(p * q);
      ASSERT_EQ(static_cast<std::int64_t>(phi.size()) - 1, table.degree());
      for (std::int64_t k = -3; k < p * q + 3; ++k) {
        const std::int64_t want = (k >= 0 && k < static_cast<std::int64_t>(phi.size())) ? phi[k] : 0;
        ASSERT_EQ(table.coefficient(k), want) << p << "*" << q << " k=" << k;
      }
    }
}

TEST(Binary, LongDivisionHelperAgreesWithOracle) {
  for (auto [p, q] : {std::pair{3, 5}, {5, 7}, {7, 31}, {13, 17}}) {
    const auto got = binary_by_long_division(p, q);
    const auto& want = oracle::cyclotomic(p * q);
    ASSERT_EQ(got, want);
  }
}

TEST(Binary, RepresentationIsUniqueAndReconstructsIndex) {
  for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {5, 11}, {7, 29}, {11, 19}, {13, 73}}) {
    const auto table = build_binary_table(p, q);
    std::int64_t nonzero = 0;
    for (std::int64_t k = 0; k < p * q; ++k) {
      const auto rep = table.representation(k);
      const int c = table.coefficient(k);
      ASSERT_EQ(rep.has_value(), c != 0) << k;
      if (!rep) continue;
      ++nonzero;
      ASSERT_GE(rep->u, 0);
      ASSERT_LT(rep->u, q);
      ASSERT_GE(rep->v, 0);
      ASSERT_LT(rep->v, p);
      ASSERT_EQ(rep->u, oracle::mod(k * table.p_q_star(), q));
      ASSERT_EQ(rep->v, oracle::mod(k * table.q_p_star(), p));
      const std::int64_t base = rep->u * p + rep->v * q;
      ASSERT_EQ(c == 1 ? base : base - p * q, k);
    }
    // Phi_pq has 2 p_q* q_p* - 1 nonzero coefficients.
    EXPECT_EQ(nonzero, 2 * table.p_q_star() * table.q_p_star() - 1);
    EXPECT_EQ(static_cast<std::int64_t>(table.support().size()), nonzero);
  }
}

TEST(Binary, SupportIsAscendingAndSignsAlternate) {
  const auto table = build_binary_table(11, 19);
  int last = 0;
  std::int32_t prev = -1;
  for (auto k : table.support()) {
    ASSERT_GT(k, prev);
    prev = k;
    const int c = table.coefficient(k);
    ASSERT_NE(c, last);
    last = c;
  }
  EXPECT_EQ(table.coefficient(0), 1);
  EXPECT_EQ(table.coefficient(table.degree()), 1);
}

TEST(Binary, Errors) {
  const auto table = build_binary_table(3, 5);
  EXPECT_THROW(table.representation(15), Error);
  EXPECT_THROW(table.representation(-1), Error);
  EXPECT_THROW(build_binary_table(5, 3), Error);
  EXPECT_THROW(build_binary_table(3, 9), Error);
  EXPECT_THROW(build_binary_table(2, 5), Error);
}
