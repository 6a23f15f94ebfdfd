#pragma once

// Concrete instances of the counting machinery behind the bound M(p) <= 2p/3:
// for a fixed triple, coefficient index i and split j, every v in [0, p-1] is
// sorted into special / plain / null sets and the lemmas relating them are
// checked exhaustively.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/binary.hpp"
#include "cyclo/checked.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo {

struct StructureContext {
  PrimeTriple triple;
  std::int64_t i = 0;
  std::int64_t j = 0;
  /// bracket[v] = [v] for v in [0, p-1].
  std::vector<std::int64_t> bracket;
  BinaryTable binary;

  /// [v] for any integer v, using [v] = [v mod p].
  std::int64_t at(std::int64_t v) const { return bracket[static_cast<std::size_t>(floor_mod(v, triple.p))]; }
  int chi(std::int64_t m) const { return ChiContext(triple, i)(m); }
};

/// Scans u in [0, q-1] for every v and asserts exactly one hit, after checking
/// that the strings (up+vq)r+1 .. (up+vq)r+p cover Z/pq exactly once.
/// j defaults to m_zero(triple, i). Errors: InvalidArgument for i < 0.
StructureContext build_context(const PrimeTriple& triple, std::int64_t i,
                               std::optional<std::int64_t> j = std::nullopt);

/// For every v, the q strings {(up+vq)r+1, ..., (up+vq)r+p}, u in [0, q-1],
/// hit each residue mod pq exactly once.
bool complete_residue_system(const PrimeTriple& triple);

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  /// First counterexample, or the reason for skipping.
  std::string detail;

  bool ok() const { return status != CheckStatus::fail; }
  void record(bool holds, const std::string& what);
};

enum class VKind { special, plain_plus, plain_minus, null };
std::string_view to_string(VKind k);

struct VClassification {
  std::int64_t v = 0;
  VKind kind = VKind::null;
  bool low = false;
  std::int64_t bracket_v = 0;
  std::int64_t bracket_v_shift = 0;
  std::int64_t h = 0;
  std::int64_t h_q = 0;
  bool c11 = false, c12 = false, c21 = false, c22 = false;
};

struct Classification {
  std::vector<VClassification> per_v;
  std::vector<std::int64_t> special, plain_plus, plain_minus, null;
  /// Largest low special integer.
  std::optional<std::int64_t> v0;
  /// Special v whose shift f(v) is plain.
  std::vector<std::int64_t> s0;

  const VClassification& operator[](std::int64_t v) const { return per_v[static_cast<std::size_t>(v)]; }
  bool in_s(std::int64_t v) const { return (*this)[v].kind == VKind::special; }
  bool in_p(std::int64_t v) const;
  bool in_p_plus(std::int64_t v) const { return (*this)[v].kind == VKind::plain_plus; }
  bool in_p_minus(std::int64_t v) const { return (*this)[v].kind == VKind::plain_minus; }
  bool in_n(std::int64_t v) const { return (*this)[v].kind == VKind::null; }
};

Classification classify_all(const StructureContext& ctx);

/// f(v) = v - r_p* reduced into [0, p-1].
std::int64_t shift_f(const PrimeTriple& t, std::int64_t v);
/// g(v) = 2 v0 + r_p* - v; may leave [0, p-1].
std::int64_t reflect_g(const PrimeTriple& t, std::int64_t v0, std::int64_t v);

CheckReport shift_lemma_check(const StructureContext& ctx);
CheckReport partition_check(const StructureContext& ctx, const Classification& cls);
CheckReport four_cases_check(const StructureContext& ctx, const Classification& cls);
CheckReport cancellation_bounds_check(const StructureContext& ctx, const Classification& cls);
CheckReport h_spectrum_check(const StructureContext& ctx, const Classification& cls);
CheckReport dichotomy_check(const StructureContext& ctx, const Classification& cls);

/// 1 <= p - q* <= r* < p - r* <= q* <= p - 1.
bool satisfies_chain(std::int64_t p, std::int64_t q_star, std::int64_t r_star);

/// Lemmas about neighbouring v. Those relying on the chain inequalities are
/// reported as skipped when the context's residues do not satisfy them.
std::vector<CheckReport> conditional_lemma_battery(const StructureContext& ctx, const Classification& cls);

struct StructureAnalysis {
  StructureContext context;
  Classification classification;
  std::vector<CheckReport> checks;
  bool all_ok() const;
};

/// Context, classification and every check above, in a fixed order.
StructureAnalysis analyze_structure(const PrimeTriple& triple, std::int64_t i,
                                    std::optional<std::int64_t> j = std::nullopt);

enum class ChainStep { swap, q_flip, r_flip };
std::string_view to_string(ChainStep s);

struct ChainTraceEntry {
  ChainStep step = ChainStep::swap;
  std::int64_t q_star = 0;
  std::int64_t r_star = 0;
  /// Primes realizing the residues after this step; 0 without witnesses.
  std::int64_t q = 0;
  std::int64_t r = 0;
};

struct ChainResult {
  std::int64_t p = 0;
  std::int64_t original_q_star = 0;
  std::int64_t original_r_star = 0;
  std::int64_t q_star = 0;
  std::int64_t r_star = 0;
  std::vector<ChainTraceEntry> swap_trace;
  std::int64_t q = 0;
  std::int64_t r = 0;
  bool has_witnesses = false;
};

/// The three-step normalization on residues alone; q_star, r_star in [1, p-1].
ChainResult chain_normalize_residues(std::int64_t p, std::int64_t q_star, std::int64_t r_star);

/// Same, starting from primes p < q1 < r1. With find_witnesses, each step is
/// realized by concrete primes q < r that do not decrease A(pqr).
/// Errors: NotPrime / NotOrdered / EvenPrime, SearchExhausted, Overflow.
ChainResult chain_normalize(std::int64_t p, std::int64_t q1, std::int64_t r1, bool find_witnesses,
                            std::int64_t max_steps = kDefaultMaxSteps);

}  // namespace cyclo
