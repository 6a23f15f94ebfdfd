#pragma once

#include <cstdint>

#include "cyclo/numtheory.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo {

/// floor(2p/3), the effective integer form of the 2p/3 ceiling.
constexpr std::int64_t two_thirds_floor(std::int64_t p) { return 2 * p / 3; }

/// Piecewise auxiliary w(j), 1 <= j <= p-1:
///   (p-1)/2 + j   for j < p/4,
///   p - j         for p/4 < j <= (p-1)/2,
///   w(p - j)      for j > (p-1)/2.
/// Throws OutOfRange for j outside [1, p-1].
std::int64_t w_func(std::int64_t p, std::int64_t j);

/// min{w(j), floor(2p/3)}.
std::int64_t m_func(std::int64_t p, std::int64_t j);

struct BzdegaParams {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

/// alpha = min{q_p*, p - q_p*, r_p*, p - r_p*}; beta in [1, p-1] with
/// alpha * beta * q * r = 1 (mod p).
BzdegaParams bzdega_params(const PrimeTriple& triple);

struct BoundReport {
  std::int64_t pos_bound = 0;
  std::int64_t neg_bound = 0;
  /// True when the floor(2p/3) term was the binding one for either side.
  bool sharpened = false;
};

/// a_pqr(k) <= pos_bound and -a_pqr(k) <= neg_bound for all k.
/// Unsharpened: min{2a + b, p - b} and min{p + 2a - b, b}; sharpened adds
/// floor(2p/3) to both minima.
BoundReport bzdega_bounds(const PrimeTriple& triple, bool sharpened);

/// Upper bound for M(p; q): m(beta*) with beta = q mod p, beta* its inverse.
std::int64_t beiter_bound_mpq(std::int64_t p, std::int64_t q);

struct ProfileBoundCheck {
  BoundReport bounds;
  std::int64_t max_value = 0;
  std::int64_t min_value = 0;
  /// pos_bound - max_value and neg_bound + min_value; zero means saturated.
  std::int64_t pos_slack = 0;
  std::int64_t neg_slack = 0;
  /// First index attaining max_value (resp. min_value).
  std::int64_t max_index = 0;
  std::int64_t min_index = 0;
};

/// Checks every coefficient of Phi_pqr against the sharpened bounds.
/// Throws BoundViolated(k, value, bound) on the first offending index.
ProfileBoundCheck verify_bounds_on_profile(const PrimeTriple& triple,
                                           const CoefficientVector& profile);

}  // namespace cyclo
