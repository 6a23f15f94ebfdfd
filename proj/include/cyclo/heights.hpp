#pragma once

// For fixed p < q, A(pqr) depends only on r modulo pq up to sign (r > q),
// so M(p; q) is a maximum over phi(pq)/2 classes, each represented by its
// smallest prime above q.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/cache.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo {

enum class Method { dense, chi };

std::string_view to_string(Method m);

struct HeightReport {
  std::int64_t n = 0;
  std::int64_t reduced_n = 0;
  std::int64_t height = 0;
  /// Smallest index of Phi_{reduced_n} attaining the height, and its signed value.
  std::int64_t smallest_k = 0;
  std::int64_t value_at_k = 0;
  Method method = Method::dense;
  std::string reduction_note;
};

struct HeightOptions {
  std::int64_t degree_cap = kDefaultDegreeCap;
  Method method = Method::dense;
  unsigned parallelism = 1;
};

/// A(n) for n >= 3 whose odd radical has at most three prime factors.
/// Method::chi requires a ternary radical. Errors: TrivialResult,
/// TooManyPrimeFactors, DegreeCapExceeded, InvalidArgument.
HeightReport height(std::int64_t n, const HeightOptions& options = {});

/// Residue class +-residue mod pq, residue <= pq - residue, with its smallest
/// prime representative above q.
struct KaplanClass {
  std::int64_t residue = 0;
  std::int64_t witness_prime = 0;
  friend bool operator==(const KaplanClass&, const KaplanClass&) = default;
};

/// All phi(pq)/2 classes in increasing residue order.
std::vector<KaplanClass> enumerate_kaplan_classes(std::int64_t p, std::int64_t q,
                                                  std::int64_t max_steps = kDefaultMaxSteps);

struct ClassHeight {
  KaplanClass cls;
  std::int64_t height = 0;
  std::int64_t smallest_k = 0;
  std::int64_t value_at_k = 0;
  bool from_cache = false;
};

struct MpqResult {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t value = 0;
  /// Lowest-residue class attaining the value.
  KaplanClass attaining_class;
  std::vector<ClassHeight> per_class;
};

struct MpqOptions {
  std::int64_t degree_cap = kDefaultDegreeCap;
  unsigned parallelism = 1;
  std::int64_t max_steps = kDefaultMaxSteps;
  /// Optional; consulted before and filled after each class computation.
  HeightCache* cache = nullptr;
};

/// Exact M(p; q). The degree cap is checked for every uncached class before
/// any profile is computed.
MpqResult m_of_p_q(std::int64_t p, std::int64_t q, const MpqOptions& options = {});

struct MpSearchResult {
  std::int64_t p = 0;
  std::int64_t best_q = 0;
  MpqResult best;
  /// (q, M(p; q)) for every prime q scanned, ascending.
  std::vector<std::pair<std::int64_t, std::int64_t>> scanned;
};

/// Scans primes q in [q_lo, q_hi] (q > p) and keeps the first q attaining
/// the running maximum; the result is a certified lower bound for M(p).
/// `sink` sees every per-q result as it completes.
MpSearchResult mp_lower_bound_search(std::int64_t p, std::int64_t q_lo, std::int64_t q_hi,
                                     const MpqOptions& options = {},
                                     const std::function<void(const MpqResult&)>& sink = {});

/// Computes A(pqr) and A(pqs) independently and compares them. Requires
/// r, s primes above q with s = +-r (mod pq); otherwise PreconditionViolated.
bool kaplan_invariance_check(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                             std::int64_t degree_cap = kDefaultDegreeCap);

}  // namespace cyclo
