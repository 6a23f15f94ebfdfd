#include <gtest/gtest.h>

#include <set>

#include "../oracle.hpp"
#include "cyclo/error.hpp"
#include "cyclo/heights.hpp"
#include "cyclo/structure.hpp"

using namespace cyclo;

namespace {

std::vector<PrimeTriple> triples(std::int64_t limit) {
  std::vector<PrimeTriple> out;
  const auto ps = oracle::primes(3, limit / 15);
  for (auto p : ps)
    for (auto q : ps)
      for (auto r : ps)
        if (p < q && q < r && p * q * r <= limit) out.push_back(make_triple(p, q, r));
  return out;
}

bool oracle_chain(std::int64_t p, std::int64_t qs, std::int64_t rs) {
  return 1 <= p - qs && p - qs <= rs && rs < p - rs && p - rs <= qs && qs <= p - 1;
}

}  // namespace

TEST(Structure, BracketIsTheUniqueHit) {
  for (const auto& t : triples(5000)) {
    for (std::int64_t i = 0; i < t.pq(); i += 3) {
      const auto ctx = build_context(t, i);
      EXPECT_EQ(ctx.j, m_zero(t, i));
      for (std::int64_t v = 0; v < t.p; ++v) {
        std::vector<std::int64_t> hits;
        for (std::int64_t u = 0; u < t.q; ++u) {
          const std::int64_t x = oracle::mod(i + 1 - t.q - (u * t.p + v * t.q) * t.r, t.pq());
          if (x >= 1 && x <= t.p) hits.push_back(u);
        }
        ASSERT_EQ(hits.size(), 1U) << t.n() << " i=" << i << " v=" << v;
        ASSERT_EQ(ctx.bracket[v], hits[0]);
        ASSERT_EQ(ctx.at(v + 3 * t.p), hits[0]);
        ASSERT_EQ(ctx.at(v - t.p), hits[0]);
      }
      for (std::int64_t m = 0; m < t.pq(); m += 5) ASSERT_EQ(ctx.chi(m), oracle::chi(t.p, t.q, t.r, i, m));
    }
  }
  EXPECT_THROW(build_context(make_triple(3, 5, 7), -1), Error);
}

TEST(Structure, CompleteResidueSystem) {
  for (const auto& t : triples(20'000)) {
    for (std::int64_t v = 0; v < t.p; ++v) {
      std::vector<int> seen(static_cast<std::size_t>(t.pq()), 0);
      for (std::int64_t u = 0; u < t.q; ++u)
        for (std::int64_t s = 1; s <= t.p; ++s) ++seen[oracle::mod((u * t.p + v * t.q) * t.r + s, t.pq())];
      for (int c : seen) ASSERT_EQ(c, 1) << t.n();
    }
    EXPECT_TRUE(complete_residue_system(t)) << t.n();
  }
}

TEST(Structure, ClassificationPartitionsResidues) {
  for (const auto& t : triples(8000)) {
    for (std::int64_t i = 1; i < t.pq(); i += 7) {
      const auto ctx = build_context(t, i);
      const auto cls = classify_all(ctx);
      ASSERT_EQ(static_cast<std::int64_t>(cls.per_v.size()), t.p);
      std::set<std::int64_t> all;
      for (const auto* group : {&cls.special, &cls.plain_plus, &cls.plain_minus, &cls.null})
        for (auto v : *group) ASSERT_TRUE(all.insert(v).second) << "duplicate v " << v;
      ASSERT_EQ(static_cast<std::int64_t>(all.size()), t.p);
      for (std::int64_t v = 0; v < t.p; ++v) {
        ASSERT_EQ(cls[v].v, v);
        ASSERT_EQ(cls.in_p(v), cls.in_p_plus(v) || cls.in_p_minus(v));
        ASSERT_EQ(cls.in_s(v) + cls.in_p(v) + cls.in_n(v), 1);
      }
      if (cls.v0) {
        ASSERT_TRUE(cls.in_s(*cls.v0));
        ASSERT_TRUE(cls[*cls.v0].low);
        for (auto v : cls.special)
          if (cls[v].low) ASSERT_LE(v, *cls.v0);
      }
      for (auto v : cls.s0) {
        ASSERT_TRUE(cls.in_s(v));
        ASSERT_TRUE(cls.in_p(shift_f(t, v)));
      }
    }
  }
}

TEST(Structure, ShiftAndReflection) {
  const auto t = make_triple(7, 17, 23);
  for (std::int64_t v = 0; v < t.p; ++v) {
    EXPECT_EQ(shift_f(t, v), oracle::mod(v - t.r_p_star, t.p));
    EXPECT_EQ(reflect_g(t, 2, v), 4 + t.r_p_star - v);
    EXPECT_EQ(reflect_g(t, 2, reflect_g(t, 2, v)), v);
  }
}

TEST(Structure, AllChecksPassOnSmallTriples) {
  for (const auto& t : triples(6000)) {
    for (std::int64_t i = 0; i < t.pq(); ++i) {
      const auto a = analyze_structure(t, i);
      ASSERT_TRUE(a.all_ok()) << t.n() << " i=" << i;
      for (const auto& c : a.checks) ASSERT_TRUE(c.ok()) << c.name << ": " << c.detail;
    }
  }
}

TEST(Structure, ArbitrarySplitsPass) {
  const auto t = make_triple(7, 17, 23);
  for (std::int64_t i = 0; i < t.pq(); i += 13)
    for (std::int64_t j = -3; j < t.pq() + 3; j += 17) ASSERT_TRUE(analyze_structure(t, i, j).all_ok()) << i << " " << j;
}

TEST(Structure, FirstTripleSmallIndex) {
  const auto a = analyze_structure(make_triple(3, 5, 7), 7);
  EXPECT_TRUE(a.all_ok());
  EXPECT_EQ(a.context.j, m_zero(make_triple(3, 5, 7), 7));
  EXPECT_FALSE(a.checks.empty());
  EXPECT_EQ(a.checks.front().name, "bracket-periodic");
}

TEST(Chain, PredicateMatchesInequalities) {
  for (std::int64_t p : oracle::primes(3, 31))
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; ++b) ASSERT_EQ(satisfies_chain(p, a, b), oracle_chain(p, a, b));
}

TEST(Chain, ResidueNormalizationLandsInChain) {
  for (std::int64_t p : oracle::primes(3, 61))
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; ++b) {
        const auto res = chain_normalize_residues(p, a, b);
        ASSERT_TRUE(oracle_chain(p, res.q_star, res.r_star)) << p << " " << a << " " << b;
        ASSERT_LE(res.swap_trace.size(), 3U);
      }
}

TEST(Chain, WorkedExample) {
  const auto res = chain_normalize(5, 7, 11, true);
  EXPECT_EQ(res.original_q_star, 3);
  EXPECT_EQ(res.original_r_star, 1);
  EXPECT_EQ(res.q_star, 4);
  EXPECT_EQ(res.r_star, 2);
  ASSERT_EQ(res.swap_trace.size(), 3U);
  EXPECT_EQ(res.swap_trace[0].step, ChainStep::swap);
  EXPECT_EQ(res.swap_trace[0].q_star, 1);
  EXPECT_EQ(res.swap_trace[0].r_star, 3);
  EXPECT_EQ(res.swap_trace[1].step, ChainStep::q_flip);
  EXPECT_EQ(res.swap_trace[1].q_star, 4);
  EXPECT_EQ(res.swap_trace[1].r_star, 3);
  EXPECT_EQ(res.swap_trace[2].step, ChainStep::r_flip);
  ASSERT_TRUE(res.has_witnesses);
  const auto t = make_triple(5, res.q, res.r);
  EXPECT_EQ(t.q_p_star, 4);
  EXPECT_EQ(t.r_p_star, 2);
  EXPECT_LT(res.q, res.r);
}
