#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "../oracle.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

using namespace cyclo;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(Numtheory, IsPrimeMatchesSieveBelowOneMillion) {
  constexpr int kLimit = 1'000'000;
  std::vector<bool> composite(kLimit + 1, false);
  composite[0] = composite[1] = true;
  for (int i = 2; i * i <= kLimit; ++i)
    if (!composite[i])
      for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
  for (int n = 0; n <= kLimit; ++n) ASSERT_EQ(is_prime(n), !composite[n]) << n;
  EXPECT_FALSE(is_prime(-7));
}

TEST(Numtheory, IsPrimeOnLargeAndAdversarialInputs) {
  EXPECT_TRUE(is_prime(2305843009213693951LL));   // 2^61 - 1
  EXPECT_TRUE(is_prime(9223372036854775783LL));   // largest prime below 2^63
  EXPECT_FALSE(is_prime(3215031751LL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051LL));  // strong pseudoprime to bases up to 23
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(1000003LL * 1000033LL));
  for (std::int64_t n = 1'000'000'000'000LL; n < 1'000'000'000'000LL + 2000; ++n)
    ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Numtheory, ModInverseAgainstBruteForce) {
  for (std::int64_t m = 2; m <= 300; ++m) {
    for (std::int64_t a = -m; a <= 2 * m; ++a) {
      std::int64_t expect = 0;
      for (std::int64_t x = 1; x < m; ++x)
        if (oracle::mod(a * x, m) == 1) {
          expect = x;
          break;
        }
      if (expect == 0) {
        EXPECT_EQ(code_of([&] { mod_inverse(a, m); }), ErrorCode::NonInvertible) << a << " " << m;
      } else {
        ASSERT_EQ(mod_inverse(a, m), expect) << a << " mod " << m;
      }
    }
  }
  EXPECT_EQ(code_of([] { mod_inverse(3, 1); }), ErrorCode::InvalidArgument);
}

TEST(Numtheory, ModInverseIsAnInverseUpToTenThousand) {
  for (std::int64_t m = 2; m <= 10'000; ++m) {
    for (std::int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const std::int64_t x = mod_inverse(a, m);
      ASSERT_GE(x, 1);
      ASSERT_LT(x, m);
      ASSERT_EQ(a * x % m, 1 % m);
    }
  }
}

TEST(Numtheory, ModInverseNearWordSize) {
  const std::int64_t m = 9223372036854775783LL;
  for (std::int64_t a : std::initializer_list<std::int64_t>{2, 3, 12345678901LL, m - 1}) {
    const std::int64_t x = mod_inverse(a, m);
    EXPECT_EQ(mod_inverse(x, m), a);
    EXPECT_EQ(pow_mod(a, m - 2, m), x);
  }
}

TEST(Numtheory, PowModAgainstRepeatedMultiplication) {
  for (std::int64_t m = 1; m <= 60; ++m)
    for (std::int64_t b = -5; b <= 70; ++b) {
      std::int64_t acc = 1 % m;
      for (std::int64_t e = 0; e <= 40; ++e) {
        ASSERT_EQ(pow_mod(b, e, m), acc) << b << "^" << e << " mod " << m;
        acc = oracle::mod(acc * b, m);
      }
    }
}

TEST(Numtheory, NextPrimeInClassAgainstLinearScan) {
  for (std::int64_t mod : {3LL, 10LL, 15LL, 35LL, 77LL, 209LL}) {
    for (std::int64_t res = 0; res < mod; ++res) {
      if (std::gcd(res, mod) != 1) {
        EXPECT_EQ(code_of([&] { next_prime_in_class(res, mod, 5); }), ErrorCode::NonCoprime);
        continue;
      }
      for (std::int64_t lb : {0LL, 7LL, 100LL, 1000LL}) {
        std::int64_t s = lb + 1;
        while (!(oracle::mod(s, mod) == res && oracle::is_prime(s))) ++s;
        ASSERT_EQ(next_prime_in_class(res, mod, lb), s) << res << " mod " << mod << " > " << lb;
        ASSERT_EQ(next_prime_in_class(res - 3 * mod, mod, lb), s);
      }
    }
  }
  // 11 * 19 * 601 requires the class -26 mod 209 above 19.
  EXPECT_EQ(next_prime_in_class(-26, 209, 19), 601);
  EXPECT_EQ(code_of([] { next_prime_in_class(1, 1000, 1, 1); }), ErrorCode::SearchExhausted);
}

TEST(Numtheory, FactorizationHelpersAgainstTrialDivision) {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    std::vector<std::int64_t> primes;
    std::int64_t phi = 0, rad = 1;
    for (std::int64_t d = 2; d <= n; ++d)
      if (n % d == 0 && oracle::is_prime(d)) {
        primes.push_back(d);
        if (d != 2) rad *= d;
      }
    for (std::int64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    ASSERT_EQ(distinct_prime_factors(n), primes) << n;
    ASSERT_EQ(euler_phi(n), phi) << n;
    ASSERT_EQ(odd_squarefree_radical(n), rad) << n;
  }
  EXPECT_EQ(primes_in_range(0, 5000), oracle::primes(0, 5000));
  EXPECT_EQ(primes_in_range(990, 1100), oracle::primes(990, 1100));
  EXPECT_TRUE(primes_in_range(24, 28).empty());
}

TEST(Numtheory, TripleResiduesAreInverses) {
  const auto ps = oracle::primes(3, 60);
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b)
      for (std::size_t c = b + 1; c < ps.size(); ++c) {
        const auto t = make_triple(ps[a], ps[b], ps[c]);
        ASSERT_EQ(t.q * t.q_p_star % t.p, 1);
        ASSERT_EQ(t.r * t.r_p_star % t.p, 1);
        ASSERT_EQ(t.p * t.p_q_star % t.q, 1);
        ASSERT_EQ(t.q_bar_p, t.q % t.p);
        // Standard identity for the binary case: p p_q* + q q_p* = pq + 1.
        ASSERT_EQ(t.p * t.p_q_star + t.q * t.q_p_star, t.pq() + 1);
        ASSERT_EQ(t.degree(), (t.p - 1) * (t.q - 1) * (t.r - 1));
      }
}

TEST(Numtheory, TripleValidation) {
  EXPECT_EQ(code_of([] { make_triple(3, 5, 9); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_triple(2, 5, 7); }), ErrorCode::EvenPrime);
  EXPECT_EQ(code_of([] { make_triple(5, 3, 7); }), ErrorCode::NotOrdered);
  EXPECT_EQ(code_of([] { make_triple(3, 3, 7); }), ErrorCode::NotOrdered);
  EXPECT_EQ(code_of([] { check_prime_pair(7, 5); }), ErrorCode::NotOrdered);
  EXPECT_NO_THROW(check_prime_pair(3, 5));
}
