#pragma once

#include <concepts>
#include <string>

#include "cyclo/error.hpp"

// Overflow-checked integer helpers. Wraparound is never silent: any overflow
// throws Error(Overflow).

namespace cyclo {

template <std::signed_integral T>
constexpr T checked_add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out))
    fail(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

template <std::signed_integral T>
constexpr T checked_sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out))
    fail(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return out;
}

template <std::signed_integral T>
constexpr T checked_mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out))
    fail(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

/// Least non-negative residue of a modulo m (m > 0).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

/// Ceiling division for m > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t m) {
  return -floor_div(-a, m);
}

}  // namespace cyclo
