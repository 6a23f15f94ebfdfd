#pragma once

// Word-sized modular arithmetic, deterministic primality and residue
// bookkeeping for a prime triple p < q < r. Products go through 128 bits and
// sums through the checked helpers, so nothing wraps silently.

#include <cstdint>
#include <vector>

namespace cyclo {

inline constexpr std::int64_t kDefaultMaxSteps = 100'000;

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m in [1, m-1]. Throws NonInvertible when gcd(a, m) != 1
/// (this includes a = 0 mod m) and InvalidArgument when m < 2.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// (base^exp) mod m for m >= 1, exp >= 0.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Deterministic for every n < 2^63: trial division below 1000, strong
/// probable-prime tests to the first twelve prime bases above it.
bool is_prime(std::int64_t n);

/// Smallest prime s > lower_bound with s = residue (mod modulus). At most
/// max_steps candidates are examined before SearchExhausted is thrown;
/// NonCoprime when gcd(residue, modulus) != 1.
std::int64_t next_prime_in_class(std::int64_t residue, std::int64_t modulus,
                                 std::int64_t lower_bound,
                                 std::int64_t max_steps = kDefaultMaxSteps);

/// Distinct prime divisors of n >= 1 in increasing order (trial division).
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

/// Product of the distinct odd primes dividing n (1 for n a power of two).
std::int64_t odd_squarefree_radical(std::int64_t n);

/// Euler's totient, by trial-division factorization.
std::int64_t euler_phi(std::int64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// A validated ternary triple 3 <= p < q < r with the residues used
/// throughout: q_p_star = q^-1 mod p, r_p_star = r^-1 mod p (both in
/// [1, p-1]), p_q_star = p^-1 mod q (in [1, q-1]) and q_bar_p = q mod p.
struct PrimeTriple {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t q_p_star = 0;
  std::int64_t r_p_star = 0;
  std::int64_t p_q_star = 0;
  std::int64_t q_bar_p = 0;

  std::int64_t pq() const { return p * q; }
  std::int64_t n() const { return p * q * r; }
  /// phi(pqr) = (p-1)(q-1)(r-1).
  std::int64_t degree() const { return (p - 1) * (q - 1) * (r - 1); }

  friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
};

/// Throws NotPrime, EvenPrime (p = 2) or NotOrdered.
PrimeTriple make_triple(std::int64_t p, std::int64_t q, std::int64_t r);

/// Validates an odd prime pair p < q (the binary case); same errors as make_triple.
void check_prime_pair(std::int64_t p, std::int64_t q);

}  // namespace cyclo
