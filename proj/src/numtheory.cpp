#include "cyclo/numtheory.hpp"

#include <array>
#include <string>

#include "cyclo/checked.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod_u(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 pow_mod_u(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_u(result, base, m);
    base = mul_mod_u(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod_u(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod_u(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::int64_t kTrialLimit = 1000;

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(m) + " < 2");
  std::int64_t r0 = m, r1 = floor_mod(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    // |quot * t1| never exceeds m in the extended Euclidean recurrence.
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1)
    fail(ErrorCode::NonInvertible,
         std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  return floor_mod(t0, m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m < 1 || exp < 0) fail(ErrorCode::InvalidArgument, "pow_mod needs m >= 1, exp >= 0");
  return static_cast<std::int64_t>(
      pow_mod_u(static_cast<u64>(floor_mod(base, m)), static_cast<u64>(exp), static_cast<u64>(m)));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < kTrialLimit && d * d <= n; ++d)
    if (n % d == 0) return false;
  if (n < kTrialLimit * kTrialLimit) return true;
  // The first twelve primes are a deterministic base set for n < 3.3e24.
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 a : kBases)
    if (!strong_probable_prime(static_cast<u64>(n), a)) return false;
  return true;
}

std::int64_t next_prime_in_class(std::int64_t residue, std::int64_t modulus,
                                 std::int64_t lower_bound, std::int64_t max_steps) {
  if (modulus < 1) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (max_steps < 1) fail(ErrorCode::InvalidArgument, "max_steps must be positive");
  if (gcd(residue, modulus) != 1)
    fail(ErrorCode::NonCoprime, "gcd(" + std::to_string(residue) + ", " +
                                    std::to_string(modulus) + ") != 1");
  const std::int64_t start = checked_add<std::int64_t>(lower_bound, 1);
  std::int64_t s = checked_add(start, floor_mod(residue - start, modulus));
  for (std::int64_t step = 0; step < max_steps; ++step) {
    if (is_prime(s)) return s;
    s = checked_add(s, modulus);
  }
  fail(ErrorCode::SearchExhausted,
       "no prime = " + std::to_string(residue) + " mod " + std::to_string(modulus) +
           " above " + std::to_string(lower_bound) + " within " + std::to_string(max_steps) +
           " steps");
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "factorization needs n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t odd_squarefree_radical(std::int64_t n) {
  std::int64_t rad = 1;
  for (std::int64_t f : distinct_prime_factors(n))
    if (f != 2) rad *= f;
  return rad;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f : distinct_prime_factors(n)) result = result / f * (f - 1);
  return result;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

void check_prime_pair(std::int64_t p, std::int64_t q) {
  for (std::int64_t x : {p, q})
    if (!is_prime(x)) fail(ErrorCode::NotPrime, std::to_string(x) + " is not prime");
  if (p == 2 || q == 2) fail(ErrorCode::EvenPrime, "the prime 2 is not allowed here");
  if (!(p < q))
    fail(ErrorCode::NotOrdered, std::to_string(p) + " < " + std::to_string(q) + " violated");
}

PrimeTriple make_triple(std::int64_t p, std::int64_t q, std::int64_t r) {
  for (std::int64_t x : {p, q, r})
    if (!is_prime(x)) fail(ErrorCode::NotPrime, std::to_string(x) + " is not prime");
  if (p == 2 || q == 2 || r == 2) fail(ErrorCode::EvenPrime, "ternary triples need odd primes");
  if (!(p < q && q < r))
    fail(ErrorCode::NotOrdered, "p < q < r violated for (" + std::to_string(p) + ", " +
                                    std::to_string(q) + ", " + std::to_string(r) + ")");
  // pqr must fit a signed word with room for index arithmetic.
  checked_mul(checked_mul(checked_mul(p, q), r), std::int64_t{4});

  PrimeTriple t;
  t.p = p;
  t.q = q;
  t.r = r;
  t.q_p_star = mod_inverse(q, p);
  t.r_p_star = mod_inverse(r, p);
  t.p_q_star = mod_inverse(p, q);
  t.q_bar_p = q % p;
  ensure(p * t.p_q_star + q * t.q_p_star == p * q + 1, "pq + 1 = p p_q* + q q_p* failed");
  return t;
}

}  // namespace cyclo
