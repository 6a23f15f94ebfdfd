#include "cyclo/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cyclo/checked.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

namespace {

std::string num(std::int64_t x) { return std::to_string(x); }

// (up + vq) r mod pq, for u, v of either sign.
std::int64_t string_base(const PrimeTriple& t, std::int64_t u, std::int64_t v) {
  const std::int64_t pq = t.pq();
  const std::int64_t a = floor_mod(floor_mod(u * t.p, pq) + floor_mod(v * t.q, pq), pq);
  return a * (t.r % pq) % pq;
}

struct Membership {
  bool s = false, plus = false, minus = false;
};

Membership memberships(const VClassification& c, std::int64_t p_q_star) {
  Membership m;
  m.s = (c.c11 && c.c21) || (c.c12 && c.c22);
  m.plus = (c.c11 && c.bracket_v >= p_q_star) || (c.c12 && c.bracket_v_shift <= p_q_star - 1);
  m.minus = (c.c21 && c.bracket_v_shift >= p_q_star) || (c.c22 && c.bracket_v <= p_q_star - 1);
  return m;
}

CheckReport skipped(std::string name, std::string reason) {
  CheckReport r;
  r.name = std::move(name);
  r.status = CheckStatus::skipped;
  r.detail = std::move(reason);
  return r;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(VKind k) {
  switch (k) {
    case VKind::special: return "S";
    case VKind::plain_plus: return "P+";
    case VKind::plain_minus: return "P-";
    case VKind::null: return "N";
  }
  return "?";
}

std::string_view to_string(ChainStep s) {
  switch (s) {
    case ChainStep::swap: return "swap";
    case ChainStep::q_flip: return "q-flip";
    case ChainStep::r_flip: return "r-flip";
  }
  return "?";
}

void CheckReport::record(bool holds, const std::string& what) {
  ++instances;
  if (holds) return;
  ++failures;
  if (status != CheckStatus::fail) detail = what;
  status = CheckStatus::fail;
}

bool complete_residue_system(const PrimeTriple& t) {
  const std::int64_t pq = t.pq();
  std::vector<char> seen(static_cast<std::size_t>(pq));
  for (std::int64_t v = 0; v < t.p; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::int64_t u = 0; u < t.q; ++u) {
      const std::int64_t base = string_base(t, u, v);
      for (std::int64_t s = 1; s <= t.p; ++s) {
        char& slot = seen[static_cast<std::size_t>((base + s) % pq)];
        if (slot) return false;
        slot = 1;
      }
    }
  }
  return true;
}

StructureContext build_context(const PrimeTriple& triple, std::int64_t i, std::optional<std::int64_t> j) {
  if (i < 0) fail(ErrorCode::InvalidArgument, "i must be non-negative");
  ensure(complete_residue_system(triple), "strings do not form a complete residue system");
  StructureContext ctx;
  ctx.triple = triple;
  ctx.i = i;
  ctx.j = j ? *j : m_zero(triple, i);
  ctx.binary = build_binary_table(triple.p, triple.q);

  const std::int64_t pq = triple.pq();
  const std::int64_t target = floor_mod(i + 1 - triple.q, pq);
  ctx.bracket.assign(static_cast<std::size_t>(triple.p), -1);
  for (std::int64_t v = 0; v < triple.p; ++v) {
    for (std::int64_t u = 0; u < triple.q; ++u) {
      std::int64_t d = floor_mod(target - string_base(triple, u, v), pq);
      if (d == 0) d = pq;
      if (d > triple.p) continue;
      ensure(ctx.bracket[static_cast<std::size_t>(v)] < 0, "bracket not unique");
      ctx.bracket[static_cast<std::size_t>(v)] = u;
    }
    ensure(ctx.bracket[static_cast<std::size_t>(v)] >= 0, "bracket missing");
  }
  return ctx;
}

bool Classification::in_p(std::int64_t v) const {
  const auto k = (*this)[v].kind;
  return k == VKind::plain_plus || k == VKind::plain_minus;
}

std::int64_t shift_f(const PrimeTriple& t, std::int64_t v) {
  return v >= t.r_p_star ? v - t.r_p_star : v - t.r_p_star + t.p;
}

std::int64_t reflect_g(const PrimeTriple& t, std::int64_t v0, std::int64_t v) {
  return 2 * v0 + t.r_p_star - v;
}

Classification classify_all(const StructureContext& ctx) {
  const auto& t = ctx.triple;
  const std::int64_t pqs = t.p_q_star;
  Classification out;
  out.per_v.resize(static_cast<std::size_t>(t.p));
  for (std::int64_t v = 0; v < t.p; ++v) {
    auto& c = out.per_v[static_cast<std::size_t>(v)];
    c.v = v;
    c.low = v <= t.q_p_star - 1;
    c.bracket_v = ctx.at(v);
    c.bracket_v_shift = ctx.at(v - t.r_p_star);
    c.h = c.bracket_v - c.bracket_v_shift;
    c.h_q = floor_mod(c.h, t.q);
    const std::int64_t up_plus = c.bracket_v * t.p + v * t.q;
    const std::int64_t up_minus = c.bracket_v_shift * t.p + v * t.q;
    if (c.low) {
      c.c11 = ctx.j <= up_minus && c.bracket_v_shift <= pqs - 1;
      c.c21 = up_plus < ctx.j && c.bracket_v <= pqs - 1;
    } else {
      c.c12 = ctx.j <= up_plus - t.pq() && c.bracket_v >= pqs;
      c.c22 = up_minus - t.pq() < ctx.j && c.bracket_v_shift >= pqs;
    }
    const auto m = memberships(c, pqs);
    if (m.s) {
      c.kind = VKind::special;
      out.special.push_back(v);
      if (c.low) out.v0 = v;
    } else if (m.plus) {
      c.kind = VKind::plain_plus;
      out.plain_plus.push_back(v);
    } else if (m.minus) {
      c.kind = VKind::plain_minus;
      out.plain_minus.push_back(v);
    } else {
      c.kind = VKind::null;
      out.null.push_back(v);
    }
  }
  for (std::int64_t v : out.special)
    if (out.in_p(shift_f(t, v))) out.s0.push_back(v);
  return out;
}

CheckReport shift_lemma_check(const StructureContext& ctx) {
  const auto& t = ctx.triple;
  CheckReport rep{"shift-lemma"};
  for (std::int64_t v = 0; v < t.p; ++v) {
    for (std::int64_t u = 0; u < t.q; ++u) {
      const int c = ctx.chi(u * t.p + v * t.q);
      const bool plus_ok = (c == 1) == (u == ctx.at(v));
      const bool minus_ok = (c == -1) == (u == ctx.at(v - t.r_p_star));
      rep.record(plus_ok && minus_ok, "u = " + num(u) + ", v = " + num(v) + ", chi = " + std::to_string(c));
    }
  }
  return rep;
}

CheckReport partition_check(const StructureContext& ctx, const Classification& cls) {
  const auto& t = ctx.triple;
  CheckReport rep{"partition"};
  for (const auto& c : cls.per_v) {
    const auto m = memberships(c, t.p_q_star);
    const int count = int(m.s) + int(m.plus) + int(m.minus);
    rep.record(count <= 1, "v = " + num(c.v) + " lies in " + std::to_string(count) + " of S, P+, P-");
    rep.record(!(c.c11 && c.c12) && !(c.c21 && c.c22), "v = " + num(c.v) + " is both low and high");
  }
  const auto total = cls.special.size() + cls.plain_plus.size() + cls.plain_minus.size() + cls.null.size();
  rep.record(static_cast<std::int64_t>(total) == t.p, "set sizes sum to " + std::to_string(total));
  return rep;
}

CheckReport four_cases_check(const StructureContext& ctx, const Classification& cls) {
  const auto& t = ctx.triple;
  const std::int64_t pq = t.pq();
  // Index by case: a (chi -1, a +1, m >= j), b (chi +1, a -1, m >= j),
  // c (chi +1, a +1, m < j), d (chi -1, a -1, m < j).
  std::set<std::int64_t> scanned[4], predicted[4];
  for (std::int32_t m : ctx.binary.support()) {
    const int a = ctx.binary.coefficient(m);
    const int c = ctx.chi(m);
    const bool tail = m >= ctx.j;
    if (c == -1 && a == 1 && tail) scanned[0].insert(m);
    if (c == 1 && a == -1 && tail) scanned[1].insert(m);
    if (c == 1 && a == 1 && !tail) scanned[2].insert(m);
    if (c == -1 && a == -1 && !tail) scanned[3].insert(m);
  }
  for (const auto& v : cls.per_v) {
    if (v.c11) predicted[0].insert(v.bracket_v_shift * t.p + v.v * t.q);
    if (v.c12) predicted[1].insert(v.bracket_v * t.p + v.v * t.q - pq);
    if (v.c21) predicted[2].insert(v.bracket_v * t.p + v.v * t.q);
    if (v.c22) predicted[3].insert(v.bracket_v_shift * t.p + v.v * t.q - pq);
  }
  CheckReport rep{"four-cases"};
  static constexpr const char* kCase[] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k)
    rep.record(scanned[k] == predicted[k], std::string("case ") + kCase[k] + ": scan found " +
                                               std::to_string(scanned[k].size()) + " terms, C-set predicts " +
                                               std::to_string(predicted[k].size()));
  return rep;
}

CheckReport cancellation_bounds_check(const StructureContext& ctx, const Classification& cls) {
  std::int64_t tail = 0, head = 0;
  for (std::int32_t m : ctx.binary.support()) {
    const std::int64_t term = ctx.binary.coefficient(m) * ctx.chi(m);
    (m >= ctx.j ? tail : head) += term;
  }
  const auto s = static_cast<std::int64_t>(cls.special.size());
  const auto pp = static_cast<std::int64_t>(cls.plain_plus.size());
  const auto pm = static_cast<std::int64_t>(cls.plain_minus.size());
  CheckReport rep{"cancellation"};
  rep.record(-tail <= s + pp, "-tail = " + num(-tail) + " > |S| + |P+| = " + num(s + pp));
  rep.record(head <= s + pm, "head = " + num(head) + " > |S| + |P-| = " + num(s + pm));
  rep.record(head + tail == 0, "head + tail = " + num(head + tail));
  return rep;
}

CheckReport h_spectrum_check(const StructureContext& ctx, const Classification& cls) {
  const auto& t = ctx.triple;
  CheckReport rep{"h-spectrum"};
  std::set<std::int64_t> spectrum;
  for (const auto& c : cls.per_v) spectrum.insert(c.h_q);
  rep.record(spectrum.size() <= 2, std::to_string(spectrum.size()) + " distinct h_q values");

  for (std::int64_t v : cls.special) {
    const auto& c = cls[v];
    if (c.low)
      rep.record(c.bracket_v < c.bracket_v_shift && c.bracket_v_shift <= t.p_q_star - 1,
                 "low special v = " + num(v) + " breaks [v] < [v-r*] <= p_q* - 1");
    else
      rep.record(t.p_q_star <= c.bracket_v_shift && c.bracket_v_shift < c.bracket_v,
                 "high special v = " + num(v) + " breaks p_q* <= [v-r*] < [v]");
    rep.record(c.low ? (-t.q < c.h && c.h < 0) : (0 < c.h && c.h < t.q),
               "special v = " + num(v) + " has h = " + num(c.h));
  }
  bool any_low = false, any_high = false;
  for (std::int64_t v : cls.special) (cls[v].low ? any_low : any_high) = true;
  for (std::int64_t a : cls.special) {
    for (std::int64_t b : cls.special) {
      if (b <= a) continue;
      const auto& ca = cls[a];
      const auto& cb = cls[b];
      if (ca.low != cb.low)
        rep.record(ca.h_q != cb.h_q, "low and high special " + num(a) + ", " + num(b) + " share h_q");
      if (any_low && any_high)
        rep.record((ca.h == cb.h) == (ca.low == cb.low),
                   "special " + num(a) + ", " + num(b) + ": equal h does not match equal lowness");
    }
  }
  return rep;
}

CheckReport dichotomy_check(const StructureContext& ctx, const Classification& cls) {
  const auto& t = ctx.triple;
  const std::int64_t pq = t.pq();
  const std::int64_t qbar = t.q_bar_p;
  const std::int64_t target = floor_mod(ctx.i + 1, pq);
  CheckReport rep{"dichotomy"};
  for (const auto& c : cls.per_v) {
    const std::int64_t k1 = floor_mod(string_base(t, c.bracket_v, c.v) + t.p + t.q - target, pq);
    const std::int64_t k2 = floor_mod(string_base(t, c.bracket_v_shift, c.v) + t.p - target, pq);
    rep.record(k1 < t.p && k2 < t.p, "v = " + num(c.v) + ": offsets " + num(k1) + ", " + num(k2) + " not below p");
    const std::int64_t hpr = floor_mod(c.h * t.p % pq * (t.r % pq), pq);
    const bool case_a = hpr == floor_mod(qbar - t.q, pq);
    const bool case_b = hpr == floor_mod(qbar - t.q - t.p, pq);
    rep.record(case_a != case_b, "v = " + num(c.v) + ": h p r matches " + (case_a ? "both" : "neither"));
    if (case_a) rep.record(k1 - k2 == qbar && k1 >= qbar, "v = " + num(c.v) + ": first case offsets inconsistent");
    if (case_b)
      rep.record(k1 - k2 == qbar - t.p && k1 <= qbar - 1, "v = " + num(c.v) + ": second case offsets inconsistent");
  }
  return rep;
}

bool satisfies_chain(std::int64_t p, std::int64_t qs, std::int64_t rs) {
  return 1 <= p - qs && p - qs <= rs && rs < p - rs && p - rs <= qs && qs <= p - 1;
}

std::vector<CheckReport> conditional_lemma_battery(const StructureContext& ctx, const Classification& cls) {
  const auto& t = ctx.triple;
  const std::int64_t p = t.p, qs = t.q_p_star, rs = t.r_p_star;
  std::vector<CheckReport> out;
  auto s_or_plus = [&](std::int64_t v) { return cls.in_s(v) || cls.in_p_plus(v); };
  auto s_or_minus = [&](std::int64_t v) { return cls.in_s(v) || cls.in_p_minus(v); };

  CheckReport window_plus{"low-window-plus"};
  for (std::int64_t v = 0; v < qs; ++v) {
    if (!s_or_minus(v)) continue;
    for (std::int64_t v1 = 0; v1 <= v - p + qs; ++v1)
      window_plus.record(!s_or_plus(v1), "v = " + num(v) + ", v1 = " + num(v1));
  }
  out.push_back(window_plus);

  CheckReport span{"low-special-span"};
  if (cls.v0)
    for (std::int64_t v : cls.special)
      if (cls[v].low) span.record(*cls.v0 - p + qs + 1 <= v && v <= *cls.v0, "low special v = " + num(v));
  out.push_back(span);

  CheckReport bij{"f-bijection"};
  std::set<std::int64_t> image;
  for (std::int64_t v = 0; v < p; ++v) {
    const std::int64_t fv = shift_f(t, v);
    image.insert(fv);
    bij.record(0 <= fv && fv < p && floor_mod(fv + rs, p) == v, "v = " + num(v));
  }
  bij.record(static_cast<std::int64_t>(image.size()) == p, "f is not onto");
  out.push_back(bij);

  const char* kGated[] = {"low-window-minus", "shift-leaves-special", "null-image", "high-shift-down",
                          "high-special-shift-down", "high-shift-up"};
  if (!satisfies_chain(p, qs, rs)) {
    for (const char* name : kGated) out.push_back(skipped(name, "hypotheses unmet: residues outside the chain"));
    return out;
  }

  CheckReport window_minus{kGated[0]};
  for (std::int64_t v = 0; v < qs; ++v) {
    if (!s_or_plus(v)) continue;
    for (std::int64_t v1 = v + rs; v1 <= qs - 1; ++v1)
      window_minus.record(!s_or_minus(v1), "v = " + num(v) + ", v1 = " + num(v1));
  }
  out.push_back(window_minus);

  CheckReport leaves{kGated[1]};
  for (std::int64_t v : cls.special) leaves.record(!cls.in_s(shift_f(t, v)), "v = " + num(v));
  out.push_back(leaves);

  CheckReport null_image{kGated[2]};
  for (std::int64_t v : cls.special)
    if (!std::binary_search(cls.s0.begin(), cls.s0.end(), v))
      null_image.record(cls.in_n(shift_f(t, v)), "v = " + num(v));
  out.push_back(null_image);

  std::vector<std::int64_t> low_special;
  for (std::int64_t v : cls.special)
    if (cls[v].low) low_special.push_back(v);

  CheckReport down{kGated[3]};
  for (std::int64_t v = qs; v < p; ++v) {
    const std::int64_t w = v - rs;
    if (!s_or_minus(v) || w < 0 || !cls.in_p(w)) continue;
    down.record(cls.in_p_plus(w), "v' = " + num(v) + ": v' - r* is not in P+");
    for (std::int64_t v1 : low_special)
      down.record(cls[w].h_q != cls[v1].h_q, "v' = " + num(v) + ", v1 = " + num(v1) + ": equal h_q");
  }
  out.push_back(down);

  CheckReport special_down{kGated[4]};
  for (std::int64_t v = qs; v < p && !low_special.empty(); ++v) {
    const std::int64_t w = v - rs;
    if (!cls.in_s(v) || w < 0 || cls.in_n(w)) continue;
    special_down.record(cls.in_p_plus(w), "v' = " + num(v) + ": v' - r* is not in P+");
    special_down.record(cls[v].h == cls[w].h && cls[v].h_q == cls[v].h && cls[w].h_q == cls[w].h,
                        "v' = " + num(v) + ": h(v') = " + num(cls[v].h) + ", h(v' - r*) = " + num(cls[w].h));
  }
  if (low_special.empty()) special_down = skipped(kGated[4], "hypotheses unmet: no low special integer");
  out.push_back(special_down);

  CheckReport up{kGated[5]};
  for (std::int64_t v = qs; v < p; ++v) {
    const std::int64_t w = v + rs - p;
    if (!s_or_plus(v) || w < 0 || !cls.in_p(w)) continue;
    up.record(cls.in_p_minus(w), "v' = " + num(v) + ": v' + r* - p is not in P-");
    if (cls.v0) up.record(cls[w].h_q != cls[*cls.v0].h_q, "v' = " + num(v) + ": h_q matches v0");
  }
  out.push_back(up);
  return out;
}

bool StructureAnalysis::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok(); });
}

StructureAnalysis analyze_structure(const PrimeTriple& triple, std::int64_t i, std::optional<std::int64_t> j) {
  StructureAnalysis a;
  a.context = build_context(triple, i, j);
  a.classification = classify_all(a.context);
  CheckReport bracket{"bracket-periodic"};
  const std::int64_t pq = triple.pq();
  const std::int64_t target = floor_mod(i + 1 - triple.q, pq);
  for (std::int64_t v = 0; v < 3 * triple.p; ++v) {
    std::int64_t hits = 0, found = -1;
    for (std::int64_t u = 0; u < triple.q; ++u) {
      std::int64_t d = floor_mod(target - string_base(triple, u, v), pq);
      if (d != 0 && d <= triple.p) ++hits, found = u;
    }
    bracket.record(hits == 1 && found == a.context.at(v % triple.p), "v = " + num(v));
  }
  a.checks.push_back(bracket);
  a.checks.push_back(shift_lemma_check(a.context));
  a.checks.push_back(partition_check(a.context, a.classification));
  a.checks.push_back(four_cases_check(a.context, a.classification));
  a.checks.push_back(cancellation_bounds_check(a.context, a.classification));
  a.checks.push_back(h_spectrum_check(a.context, a.classification));
  a.checks.push_back(dichotomy_check(a.context, a.classification));
  for (auto& c : conditional_lemma_battery(a.context, a.classification)) a.checks.push_back(std::move(c));
  return a;
}

namespace {

struct ChainState {
  std::int64_t p, q_star, r_star, q, r;
};

// Exchanges the residues of q and r: the new pair is (r1, s) with s prime,
// s = q1 (mod p r1), s > r1.
void qr_swap(ChainState& st, bool witnesses, std::int64_t max_steps) {
  std::swap(st.q_star, st.r_star);
  if (!witnesses) return;
  const std::int64_t modulus = checked_mul(st.p, st.r);
  const std::int64_t s = next_prime_in_class(st.q, modulus, st.r, max_steps);
  st.q = st.r;
  st.r = s;
}

// Replaces r by a prime s > q with s = -r (mod pq).
void r_flip(ChainState& st, bool witnesses, std::int64_t max_steps) {
  st.r_star = st.p - st.r_star;
  if (!witnesses) return;
  const std::int64_t pq = checked_mul(st.p, st.q);
  st.r = next_prime_in_class(floor_mod(-st.r, pq), pq, st.q, max_steps);
}

ChainResult run_chain(ChainState st, bool witnesses, std::int64_t max_steps) {
  const std::int64_t p = st.p;
  ChainResult out;
  out.p = p;
  out.original_q_star = st.q_star;
  out.original_r_star = st.r_star;
  out.has_witnesses = witnesses;
  auto log = [&](ChainStep step) {
    out.swap_trace.push_back(ChainTraceEntry{step, st.q_star, st.r_star, witnesses ? st.q : 0, witnesses ? st.r : 0});
  };
  if (std::min(st.q_star, p - st.q_star) > std::min(st.r_star, p - st.r_star)) {
    qr_swap(st, witnesses, max_steps);
    log(ChainStep::swap);
  }
  if (st.q_star <= (p - 1) / 2) {
    qr_swap(st, witnesses, max_steps);
    r_flip(st, witnesses, max_steps);
    qr_swap(st, witnesses, max_steps);
    log(ChainStep::q_flip);
  }
  if (st.r_star > (p - 1) / 2) {
    r_flip(st, witnesses, max_steps);
    log(ChainStep::r_flip);
  }
  out.q_star = st.q_star;
  out.r_star = st.r_star;
  if (witnesses) {
    out.q = st.q;
    out.r = st.r;
    const auto t = make_triple(p, st.q, st.r);
    ensure(t.q_p_star == st.q_star && t.r_p_star == st.r_star, "witness residues drifted");
  }
  ensure(satisfies_chain(p, out.q_star, out.r_star), "chain normalization missed the target");
  return out;
}

}  // namespace

ChainResult chain_normalize_residues(std::int64_t p, std::int64_t q_star, std::int64_t r_star) {
  if (!is_prime(p) || p == 2) fail(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (q_star < 1 || q_star >= p || r_star < 1 || r_star >= p)
    fail(ErrorCode::OutOfRange, "residues must lie in [1, p-1]");
  return run_chain(ChainState{p, q_star, r_star, 0, 0}, false, 0);
}

ChainResult chain_normalize(std::int64_t p, std::int64_t q1, std::int64_t r1, bool find_witnesses,
                            std::int64_t max_steps) {
  const auto t = make_triple(p, q1, r1);
  return run_chain(ChainState{p, t.q_p_star, t.r_p_star, q1, r1}, find_witnesses, max_steps);
}

}  // namespace cyclo
