#include <gtest/gtest.h>

#include <algorithm>

#include "../oracle.hpp"
#include "cyclo/error.hpp"
#include "cyclo/suites.hpp"

using namespace cyclo;

TEST(Suites, EveryNamedSuitePassesWithFewTrials) {
  for (const auto& name : suite_names()) {
    SuiteOptions opts;
    opts.trials = name == "cross-validate" ? 30 : 3;
    opts.seed = 1234;
    const auto rep = run_suite(name, opts);
    EXPECT_TRUE(rep.ok()) << name;
    for (const auto& c : rep.checks) EXPECT_EQ(c.failed, 0) << name << "/" << c.name << ": " << c.first_failure;
  }
  EXPECT_THROW(run_suite("no-such-suite"), Error);
}

TEST(Suites, SeedDeterminesReport) {
  SuiteOptions opts;
  opts.trials = 5;
  opts.seed = 99;
  const auto a = run_suite("structure", opts);
  opts.parallelism = 3;
  const auto b = run_suite("structure", opts);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
    EXPECT_EQ(a.checks[i].skipped, b.checks[i].skipped);
  }
}

TEST(Suites, TriplesUpToMatchesEnumeration) {
  const auto got = triples_up_to(10'000);
  std::vector<std::int64_t> want;
  const auto ps = oracle::primes(3, 10'000 / 15);
  for (auto p : ps)
    for (auto q : ps)
      for (auto r : ps)
        if (p < q && q < r && p * q * r <= 10'000) want.push_back(p * q * r);
  std::sort(want.begin(), want.end());
  std::vector<std::int64_t> ns;
  for (const auto& t : got) ns.push_back(t.n());
  std::vector<std::int64_t> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, want);
}

TEST(Suites, FailureBookkeeping) {
  SuiteCheck c;
  c.name = "x";
  c.record(true, "a");
  c.record(false, "first");
  c.record(false, "second");
  c.skip();
  EXPECT_EQ(c.passed, 1);
  EXPECT_EQ(c.failed, 2);
  EXPECT_EQ(c.skipped, 1);
  EXPECT_EQ(c.first_failure, "first");
}
