#include <gtest/gtest.h>

#include <map>

#include "../oracle.hpp"
#include "cyclo/bounds.hpp"
#include "cyclo/error.hpp"
#include "cyclo/heights.hpp"
#include "cyclo/reference.hpp"

using namespace cyclo;

namespace {

std::int64_t oracle_w(std::int64_t p, std::int64_t j) {
  if (2 * j > p - 1) j = p - j;
  return 4 * j < p ? (p - 1) / 2 + j : p - j;
}

}  // namespace

TEST(Bounds, WAndMFunctions) {
  for (std::int64_t p : oracle::primes(3, 200)) {
    for (std::int64_t j = 1; j < p; ++j) {
      ASSERT_EQ(w_func(p, j), oracle_w(p, j)) << p << " " << j;
      ASSERT_EQ(w_func(p, j), w_func(p, p - j));
      ASSERT_EQ(m_func(p, j), std::min(oracle_w(p, j), 2 * p / 3));
      ASSERT_LE(3 * m_func(p, j), 2 * p);
    }
    EXPECT_THROW(w_func(p, 0), Error);
    EXPECT_THROW(w_func(p, p), Error);
  }
  EXPECT_EQ(w_func(11, 1), 6);
  EXPECT_EQ(w_func(11, 4), 7);
  EXPECT_EQ(two_thirds_floor(19), 12);
}

TEST(Bounds, BzdegaParamsAgainstSearch) {
  const auto ps = oracle::primes(3, 47);
  for (auto p : ps)
    for (auto q : ps)
      for (auto r : ps) {
        if (!(p < q && q < r)) continue;
        const auto t = make_triple(p, q, r);
        std::int64_t qs = 1, rs = 1;
        while (q * qs % p != 1) ++qs;
        while (r * rs % p != 1) ++rs;
        const std::int64_t alpha = std::min({qs, p - qs, rs, p - rs});
        std::int64_t beta = 1;
        while (alpha * beta * q % p * r % p != 1) ++beta;
        const auto got = bzdega_params(t);
        ASSERT_EQ(got.alpha, alpha);
        ASSERT_EQ(got.beta, beta);
        const auto plain = bzdega_bounds(t, false);
        ASSERT_EQ(plain.pos_bound, std::min(2 * alpha + beta, p - beta));
        ASSERT_EQ(plain.neg_bound, std::min(p + 2 * alpha - beta, beta));
        const auto sharp = bzdega_bounds(t, true);
        ASSERT_EQ(sharp.pos_bound, std::min(plain.pos_bound, 2 * p / 3));
        ASSERT_EQ(sharp.neg_bound, std::min(plain.neg_bound, 2 * p / 3));
      }
}

TEST(Bounds, EveryCoefficientRespectsSharpenedBounds) {
  const auto ps = oracle::primes(3, 41);
  for (auto p : ps)
    for (auto q : ps)
      for (auto r : ps) {
        if (!(p < q && q < r) || p * q * r > 40'000) continue;
        const auto t = make_triple(p, q, r);
        const auto dense = dense_phi(t.n());
        const auto bounds = bzdega_bounds(t, true);
        std::int64_t hi = 0, lo = 0;
        for (auto c : dense.coeffs) {
          hi = std::max<std::int64_t>(hi, c);
          lo = std::min<std::int64_t>(lo, c);
        }
        ASSERT_LE(hi, bounds.pos_bound) << t.n();
        ASSERT_LE(-lo, bounds.neg_bound) << t.n();
        const auto check = verify_bounds_on_profile(t, dense);
        ASSERT_EQ(check.max_value, hi);
        ASSERT_EQ(check.min_value, lo);
        ASSERT_EQ(check.pos_slack, bounds.pos_bound - hi);
      }
}

TEST(Bounds, ViolationIsReported) {
  const auto t = make_triple(3, 5, 7);
  auto dense = dense_phi(t.n());
  dense.coeffs[5] = 9;
  try {
    verify_bounds_on_profile(t, dense);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundViolated);
  }
}

TEST(Bounds, BeiterBoundDominatesMpq) {
  for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {5, 7}, {5, 11}, {5, 13}, {7, 11}, {7, 17}, {11, 19}}) {
    const std::int64_t inv = mod_inverse(q % p, p);
    EXPECT_EQ(beiter_bound_mpq(p, q), std::min<std::int64_t>(oracle_w(p, inv), 2 * p / 3));
    EXPECT_LE(m_of_p_q(p, q).value, beiter_bound_mpq(p, q)) << p << "," << q;
  }
  EXPECT_EQ(beiter_bound_mpq(11, 19), 7);
}

TEST(Bounds, ReferenceTableConsistency) {
  std::map<std::int64_t, std::int64_t> row_max;
  for (const auto& e : reference::kTable2) {
    ASSERT_GE(e.beta, 1);
    ASSERT_LE(2 * e.beta, e.p - 1);
    EXPECT_LE(e.value, m_func(e.p, mod_inverse(e.beta, e.p))) << e.p << " " << e.beta;
    row_max[e.p] = std::max(row_max[e.p], e.value);
  }
  for (const auto& m : reference::kMaxHeight) {
    EXPECT_EQ(row_max[m.p], m.value) << m.p;
    EXPECT_LE(3 * m.value, 2 * m.p);
  }
}

TEST(Bounds, SmallRowsAttainedBySmallQ) {
  for (const auto& e : reference::kTable2) {
    if (e.p > 5) continue;
    std::int64_t best = 0;
    for (std::int64_t q : oracle::primes(e.p + 1, 40))
      if (q % e.p == e.beta || q % e.p == e.p - e.beta) best = std::max(best, m_of_p_q(e.p, q).value);
    EXPECT_EQ(best, e.value) << e.p << " " << e.beta;
  }
}
