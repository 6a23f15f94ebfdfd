#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/ternary.hpp"

namespace cyclo {

struct SuiteCheck {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;
  std::string first_failure;

  void pass() { ++passed; }
  void skip() { ++skipped; }
  void fail(const std::string& what);
  void record(bool ok, const std::string& what) { ok ? pass() : fail(what); }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  /// A deque so references from check() survive later insertions.
  std::deque<SuiteCheck> checks;

  bool ok() const;
  SuiteCheck& check(std::string_view name);
};

struct SuiteOptions {
  /// Negative selects the suite's own default.
  std::int64_t trials = -1;
  std::uint64_t seed = 42;
  std::int64_t degree_cap = kDefaultDegreeCap;
  unsigned parallelism = 1;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// Coefficients of Phi_pq by exact long division of (x^pq - 1)(x - 1) by
/// (x^p - 1)(x^q - 1).
std::vector<std::int64_t> binary_by_long_division(std::int64_t p, std::int64_t q);

/// All triples p < q < r of odd primes with pqr <= limit, ascending.
std::vector<PrimeTriple> triples_up_to(std::int64_t limit);

}  // namespace cyclo
