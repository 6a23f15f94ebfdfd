#pragma once

// Reference values used by `cyclo table1`, the bounds-table2 suite
// and the acceptance tests. Bump kReferenceDataVersion on any edit.

#include <array>
#include <cstdint>
#include <span>

namespace cyclo::reference {

inline constexpr int kReferenceDataVersion = 1;

// Smallest n = pqr with A(n) = M(p), with the smallest index k attaining the
// height and the signed coefficient there.
struct Table1Row {
  std::int64_t p, q, r;
  std::int64_t max_height;
  std::int64_t smallest_k;
  std::int64_t value;
  constexpr std::int64_t n() const { return p * q * r; }
};

inline constexpr std::array<Table1Row, 6> kTable1{{
    {3, 5, 7, 2, 7, -2},
    {5, 7, 11, 3, 119, -3},
    {7, 17, 23, 4, 875, 4},
    {11, 19, 601, 7, 34884, 7},
    {13, 73, 307, 8, 89647, 8},
    {19, 53, 859, 12, 318742, -12},
}};

// M_beta(p): the maximum of M(p; q) over primes q = beta (mod p), for
// 1 <= beta <= (p-1)/2. `exact` marks entries known to be equalities.
struct Table2Entry {
  std::int64_t p;
  std::int64_t beta;
  std::int64_t value;
  bool exact;
};

inline constexpr std::array<Table2Entry, 26> kTable2{{
    {3, 1, 2, true},
    {5, 1, 3, true},   {5, 2, 3, true},
    {7, 1, 4, true},   {7, 2, 4, true},   {7, 3, 4, true},
    {11, 1, 6, true},  {11, 2, 6, true},  {11, 3, 7, true},  {11, 4, 7, true},  {11, 5, 6, false},
    {13, 1, 7, true},  {13, 2, 7, true},  {13, 3, 7, false}, {13, 4, 8, true},  {13, 5, 8, true},
    {13, 6, 7, false},
    {19, 1, 10, true}, {19, 2, 10, true}, {19, 3, 10, false}, {19, 4, 12, true}, {19, 5, 11, false},
    {19, 6, 9, false}, {19, 7, 11, true}, {19, 8, 11, false}, {19, 9, 10, false},
}};

// M(p) for the primes covered by kTable2.
struct MaxHeight {
  std::int64_t p;
  std::int64_t value;
};

inline constexpr std::array<MaxHeight, 6> kMaxHeight{{{3, 2}, {5, 3}, {7, 4}, {11, 7}, {13, 8}, {19, 12}}};

// Pairs with q = 1 (mod p), where M(p; q) = min{(q-1)/p + 1, (p+1)/2}.
struct MpqCase {
  std::int64_t p, q, value;
};

inline constexpr std::array<MpqCase, 5> kSmallMpq{{{3, 7, 2}, {3, 13, 2}, {5, 11, 3}, {7, 29, 4}, {11, 23, 3}}};

constexpr std::int64_t small_q_formula(std::int64_t p, std::int64_t q) {
  const std::int64_t a = (q - 1) / p + 1;
  const std::int64_t b = (p + 1) / 2;
  return a < b ? a : b;
}

}  // namespace cyclo::reference
