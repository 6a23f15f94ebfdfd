#include "cyclo/binary.hpp"

#include <string>

#include "cyclo/checked.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

std::optional<BinaryRep> BinaryTable::representation(std::int64_t k) const {
  if (k < 0 || k >= pq())
    fail(ErrorCode::IndexOutOfRange,
         "index " + std::to_string(k) + " outside [0, " + std::to_string(pq()) + ")");
  if (coeffs_[static_cast<std::size_t>(k)] == 0) return std::nullopt;
  return reps_[static_cast<std::size_t>(k)];
}

BinaryTable build_binary_table(std::int64_t p, std::int64_t q) {
  check_prime_pair(p, q);
  const std::int64_t pq = checked_mul(p, q);
  if (pq > INT32_MAX) fail(ErrorCode::OutOfRange, "pq too large for a dense table");

  BinaryTable t;
  t.p_ = p;
  t.q_ = q;
  t.p_q_star_ = mod_inverse(p, q);
  t.q_p_star_ = mod_inverse(q, p);
  t.coeffs_.assign(static_cast<std::size_t>(pq), 0);
  t.reps_.assign(static_cast<std::size_t>(pq), BinaryRep{});

  auto place = [&](std::int64_t k, int sign, std::int64_t u, std::int64_t v) {
    ensure(k >= 0 && k < pq, "binary index outside [0, pq)");
    auto idx = static_cast<std::size_t>(k);
    ensure(t.coeffs_[idx] == 0, "binary index hit twice");
    t.coeffs_[idx] = static_cast<std::int8_t>(sign);
    t.reps_[idx] = BinaryRep{u, v};
  };

  for (std::int64_t u = 0; u < t.p_q_star_; ++u)
    for (std::int64_t v = 0; v < t.q_p_star_; ++v) place(u * p + v * q, +1, u, v);
  for (std::int64_t u = t.p_q_star_; u < q; ++u)
    for (std::int64_t v = t.q_p_star_; v < p; ++v) place(u * p + v * q - pq, -1, u, v);

  for (std::int64_t k = 0; k < pq; ++k)
    if (t.coeffs_[static_cast<std::size_t>(k)] != 0) t.support_.push_back(static_cast<std::int32_t>(k));
  return t;
}

}  // namespace cyclo
