#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cyclo {

/// The pair (u, v) = ([k]_p, [k]_q) writing a nonzero index of Phi_pq as
/// k = up + vq (coefficient +1) or k = up + vq - pq (coefficient -1).
struct BinaryRep {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend bool operator==(const BinaryRep&, const BinaryRep&) = default;
};

/// Dense coefficient table of Phi_pq over [0, pq), built from the
/// Lam-Leung description. Immutable after construction.
class BinaryTable {
 public:
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t pq() const { return p_ * q_; }
  std::int64_t p_q_star() const { return p_q_star_; }
  std::int64_t q_p_star() const { return q_p_star_; }
  /// phi(pq) = (p-1)(q-1).
  std::int64_t degree() const { return (p_ - 1) * (q_ - 1); }

  /// a_pq(k) for any integer k; 0 outside [0, phi(pq)].
  int coefficient(std::int64_t k) const {
    return (k < 0 || k >= pq()) ? 0 : coeffs_[static_cast<std::size_t>(k)];
  }

  /// Present exactly when a_pq(k) != 0. Throws IndexOutOfRange unless 0 <= k < pq.
  std::optional<BinaryRep> representation(std::int64_t k) const;

  std::span<const std::int8_t> coefficients() const { return coeffs_; }
  /// Indices with a nonzero coefficient, ascending.
  std::span<const std::int32_t> support() const { return support_; }

 private:
  friend BinaryTable build_binary_table(std::int64_t p, std::int64_t q);

  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t p_q_star_ = 0;
  std::int64_t q_p_star_ = 0;
  std::vector<std::int8_t> coeffs_;
  std::vector<BinaryRep> reps_;
  std::vector<std::int32_t> support_;
};

/// Throws NotPrime, EvenPrime or NotOrdered for a bad pair. Linear in pq.
BinaryTable build_binary_table(std::int64_t p, std::int64_t q);

inline int binary_coefficient(const BinaryTable& table, std::int64_t k) {
  return table.coefficient(k);
}

inline std::optional<BinaryRep> representation(const BinaryTable& table, std::int64_t k) {
  return table.representation(k);
}

}  // namespace cyclo
