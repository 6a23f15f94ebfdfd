#include "cyclo/bounds.hpp"

#include <algorithm>
#include <string>

#include "cyclo/error.hpp"

namespace cyclo {

std::int64_t w_func(std::int64_t p, std::int64_t j) {
  if (p < 3 || j < 1 || j > p - 1)
    fail(ErrorCode::OutOfRange, "w(" + std::to_string(j) + ") undefined for p = " + std::to_string(p));
  if (j > (p - 1) / 2) j = p - j;
  // p odd prime: 4j == p never happens, so the split is strict.
  ensure(4 * j != p, "w: j = p/4");
  return 4 * j < p ? (p - 1) / 2 + j : p - j;
}

std::int64_t m_func(std::int64_t p, std::int64_t j) {
  return std::min(w_func(p, j), two_thirds_floor(p));
}

BzdegaParams bzdega_params(const PrimeTriple& t) {
  BzdegaParams out;
  out.alpha = std::min({t.q_p_star, t.p - t.q_p_star, t.r_p_star, t.p - t.r_p_star});
  const std::int64_t aqr = out.alpha % t.p * (t.q % t.p) % t.p * (t.r % t.p) % t.p;
  out.beta = mod_inverse(aqr, t.p);
  return out;
}

BoundReport bzdega_bounds(const PrimeTriple& t, bool sharpened) {
  const auto [a, b] = bzdega_params(t);
  BoundReport out;
  out.pos_bound = std::min(2 * a + b, t.p - b);
  out.neg_bound = std::min(t.p + 2 * a - b, b);
  if (sharpened) {
    const std::int64_t cap = two_thirds_floor(t.p);
    out.sharpened = cap < out.pos_bound || cap < out.neg_bound;
    out.pos_bound = std::min(out.pos_bound, cap);
    out.neg_bound = std::min(out.neg_bound, cap);
  }
  return out;
}

std::int64_t beiter_bound_mpq(std::int64_t p, std::int64_t q) {
  check_prime_pair(p, q);
  return m_func(p, mod_inverse(q % p, p));
}

ProfileBoundCheck verify_bounds_on_profile(const PrimeTriple& t, const CoefficientVector& profile) {
  if (profile.n != t.n()) fail(ErrorCode::InvalidArgument, "profile does not belong to the triple");
  ProfileBoundCheck out;
  out.bounds = bzdega_bounds(t, true);
  for (std::int64_t k = 0; k <= profile.degree; ++k) {
    const std::int64_t a = profile.coeffs[static_cast<std::size_t>(k)];
    if (a > out.bounds.pos_bound)
      fail(ErrorCode::BoundViolated, "k = " + std::to_string(k) + ", value " + std::to_string(a) +
                                         " > bound " + std::to_string(out.bounds.pos_bound));
    if (-a > out.bounds.neg_bound)
      fail(ErrorCode::BoundViolated, "k = " + std::to_string(k) + ", value " + std::to_string(a) +
                                         " < -" + std::to_string(out.bounds.neg_bound));
    if (a > out.max_value) {
      out.max_value = a;
      out.max_index = k;
    }
    if (a < out.min_value) {
      out.min_value = a;
      out.min_index = k;
    }
  }
  out.pos_slack = out.bounds.pos_bound - out.max_value;
  out.neg_slack = out.bounds.neg_bound + out.min_value;
  return out;
}

}  // namespace cyclo
