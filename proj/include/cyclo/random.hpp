#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// ranges are drawn by plain reduction to keep runs identical across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    ensure(lo <= hi, "empty random range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    ensure(!items.empty(), "pick from empty list");
    return items[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random triple p < q < r of odd primes with p <= p_max and r <= r_max.
inline PrimeTriple random_triple(Rng& rng, std::int64_t p_max, std::int64_t r_max) {
  const auto ps = primes_in_range(3, p_max);
  for (;;) {
    const std::int64_t p = rng.pick(ps);
    const auto rest = primes_in_range(p + 1, r_max);
    if (rest.size() < 2) continue;
    std::int64_t q = rng.pick(rest);
    std::int64_t r = rng.pick(rest);
    if (q == r) continue;
    if (q > r) std::swap(q, r);
    return make_triple(p, q, r);
  }
}

}  // namespace cyclo
