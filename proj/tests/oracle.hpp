#pragma once

// Slow, obviously-correct reference computations shared by the tests. Nothing
// here calls into the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Exact division by a monic divisor; the remainder is discarded.
inline Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  return quot;
}

// Phi_n from x^n - 1 = prod_{d | n} Phi_d, memoized over divisors.
inline const Poly& cyclotomic(std::int64_t n) {
  static std::map<std::int64_t, Poly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide(p, cyclotomic(d));
  return memo[n] = p;
}

inline std::int64_t height(const Poly& p) {
  std::int64_t h = 0;
  for (auto c : p) h = std::max(h, c < 0 ? -c : c);
  return h;
}

// chi_k(m) read off the defining inequalities, scanning s.
inline int chi(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t k, std::int64_t m) {
  const std::int64_t pq = p * q;
  const std::int64_t lo = m * r - k - 1 - 2 * pq;
  const std::int64_t hi = m * r + q + p - k - 1 + 2 * pq;
  for (std::int64_t s = lo / pq - 1; s <= hi / pq + 1; ++s) {
    const std::int64_t x = k + 1 + s * pq;
    if (m * r + q < x && x <= m * r + q + p) return 1;
    if (m * r < x && x <= m * r + p) return -1;
  }
  return 0;
}

inline std::vector<std::int64_t> primes(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace oracle
