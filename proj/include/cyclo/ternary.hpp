#pragma once

// Coefficients of Phi_n for n with at most three odd prime factors, by two
// independent routes. dense_phi expands the truncated product
// prod_{d | n} (1 - x^d)^{mu(n/d)}. ChiEvaluator writes one ternary
// coefficient as a signed sum of binary coefficients a_pq(m) weighted by chi_k(m).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/binary.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

inline constexpr std::int64_t kDefaultDegreeCap = 20'000'000;

/// Exact coefficients of Phi_n, index 0..degree, with cached height data.
struct CoefficientVector {
  std::int64_t n = 0;
  std::int64_t degree = 0;
  std::vector<std::int32_t> coeffs;
  std::int64_t height = 0;
  /// Smallest k with |coeffs[k]| == height.
  std::int64_t argmax = 0;

  /// a_n(k), 0 outside [0, degree].
  std::int64_t at(std::int64_t k) const {
    return (k < 0 || k > degree) ? 0 : coeffs[static_cast<std::size_t>(k)];
  }
};

/// n >= 3 odd squarefree with 1-3 prime factors. Errors: InvalidArgument,
/// TooManyPrimeFactors, DegreeCapExceeded, Overflow.
CoefficientVector dense_phi(std::int64_t n, std::int64_t degree_cap = kDefaultDegreeCap);

/// Result of stripping n down to its largest odd squarefree divisor, using
/// Phi_{p^2 m}(x) = Phi_{pm}(x^p) and Phi_{2m}(x) = Phi_m(-x) for odd m.
struct ReducedIndex {
  std::int64_t n_raw = 0;
  std::int64_t n_reduced = 0;
  bool even_reduction = false;
  bool square_reduction = false;
  /// n_raw / rad(n_raw): Phi_{n_raw}(x) = Phi_{rad}(x^stretch).
  std::int64_t stretch = 1;

  /// "no-op", "even-reduction", "square-reduction" or both joined by '+'.
  std::string note() const;

  struct Mapped {
    std::int64_t k = 0;
    int sign = 1;
  };
  /// a_{n_raw}(k) = sign * a_{n_reduced}(mapped.k), or nothing when the
  /// raw coefficient is structurally zero.
  std::optional<Mapped> map_index(std::int64_t k) const;
};

/// n_raw >= 3. Throws TrivialResult when the odd radical is 1.
ReducedIndex reduce_index(std::int64_t n_raw);

/// chi_k(m) for a fixed triple and index k; depends only on k, m mod pq.
class ChiContext {
 public:
  ChiContext(const PrimeTriple& triple, std::int64_t k);

  const PrimeTriple& triple() const { return triple_; }
  std::int64_t k() const { return k_; }

  int operator()(std::int64_t m) const;

 private:
  PrimeTriple triple_;
  std::int64_t k_;
  std::int64_t k_mod_;
};

inline int chi(const ChiContext& ctx, std::int64_t m) { return ctx(m); }

/// Smallest m with m r + p + q >= k + 1 + pq, via ceil((k + (p-1)(q-1)) / r).
std::int64_t m_zero(const PrimeTriple& triple, std::int64_t k);

/// Evaluates ternary coefficients through the chi decomposition. Holds the
/// binary table and r^-1 mod pq, so per-coefficient work is O(p): chi_k is
/// nonzero on exactly 2p residues m mod pq, found directly from
/// m r = k + 1 - q - t (value +1) and m r = k + 1 - t (value -1), t in [1, p].
class ChiEvaluator {
 public:
  explicit ChiEvaluator(const PrimeTriple& triple);

  const PrimeTriple& triple() const { return triple_; }
  const BinaryTable& binary() const { return table_; }

  /// a_pqr(k); 0 for k outside [0, phi(pqr)].
  std::int64_t coefficient(std::int64_t k) const;

  /// Same value by a literal scan over m in [max(0, m0), pq - 1].
  std::int64_t coefficient_scan(std::int64_t k) const;

  /// sum_{m >= j} a_pq(m) chi_k(m).
  std::int64_t tail_sum(std::int64_t k, std::int64_t j) const;

  /// max over all j of |tail_sum(k, j)|.
  std::int64_t max_tail(std::int64_t k) const;

  /// The 2p nonzero (m, chi_k(m)) pairs with m in [0, pq), ascending in m.
  std::vector<std::pair<std::int64_t, int>> chi_support(std::int64_t k) const;

 private:
  PrimeTriple triple_;
  BinaryTable table_;
  std::int64_t r_inv_ = 0;
};

std::int64_t ternary_coefficient_chi(const PrimeTriple& triple, std::int64_t k);

/// sum_{m=0}^{pq-1} a_pq(m) chi_k(m); always 0.
std::int64_t sum_zero_check(const PrimeTriple& triple, std::int64_t k);

struct CrossValidationReport {
  PrimeTriple triple;
  std::int64_t coefficients_checked = 0;
  std::int64_t max_index = 0;
  std::int64_t height = 0;
  double dense_seconds = 0;
  double chi_seconds = 0;
};

/// Compares dense_phi(pqr) with ChiEvaluator::coefficient at every index.
/// Throws Mismatch on the first (lowest) disagreeing k.
CrossValidationReport cross_validate(const PrimeTriple& triple,
                                     std::int64_t degree_cap = kDefaultDegreeCap,
                                     unsigned parallelism = 1);

/// Same, reusing a dense profile that has already been computed.
CrossValidationReport cross_validate(const PrimeTriple& triple, const CoefficientVector& dense,
                                     unsigned parallelism = 1);

}  // namespace cyclo
