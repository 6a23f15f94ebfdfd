#include "cyclo/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <set>

#include "cyclo/bounds.hpp"
#include "cyclo/cache.hpp"
#include "cyclo/heights.hpp"
#include "cyclo/reference.hpp"
#include "cyclo/structure.hpp"
#include "cyclo/suites.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Mismatch: return kExitMismatch;
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::SearchExhausted:
    case ErrorCode::Overflow: return kExitResourceCap;
    case ErrorCode::BoundViolated:
    case ErrorCode::InternalInconsistency: return kExitVerificationFailure;
    default: return kExitBadInput;
  }
}

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::int64_t degree_cap = kDefaultDegreeCap;
  std::string cache_path;
  std::uint64_t seed = 42;
  std::string format = "human";
  unsigned parallelism = 1;

  bool human() const { return format == "human"; }
  bool as_json() const { return format == "json"; }
};

// Parallelism and the cache location are left out on purpose: they must not
// change the bytes of a report.
void emit(std::ostream& out, const RunConfig& cfg, const std::string& command, const json& params,
          const json& results) {
  json config;
  config["command"] = command;
  config["degree_cap"] = cfg.degree_cap;
  for (const auto& [k, v] : params.items()) config[k] = v;
  json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["seed"] = cfg.seed;
  doc["config"] = config;
  doc["results"] = results;
  out << doc.dump(2) << '\n';
}

std::unique_ptr<HeightCache> open_cache(const RunConfig& cfg, std::ostream& err) {
  std::optional<std::filesystem::path> path;
  if (!cfg.cache_path.empty()) path = cfg.cache_path;
  else path = cache_path_from_env();
  if (!path) return nullptr;
  return std::make_unique<HeightCache>(*path, &err);
}

std::string triple_text(std::int64_t p, std::int64_t q, std::int64_t r) { return fmt::format("{}*{}*{}", p, q, r); }

// coeff

struct CoeffArgs {
  std::int64_t n = 0;
  std::optional<std::int64_t> k;
  std::string method = "dense";
};

int cmd_coeff(const RunConfig& cfg, const CoeffArgs& a, std::ostream& out) {
  const auto reduced = reduce_index(a.n);
  std::optional<CoefficientVector> dense;
  std::optional<ChiEvaluator> chi;
  if (a.method != "chi") dense = dense_phi(reduced.n_reduced, cfg.degree_cap);
  if (a.method != "dense") {
    const auto primes = distinct_prime_factors(reduced.n_reduced);
    if (primes.size() != 3) fail(ErrorCode::InvalidArgument, "the chi method needs a ternary index after reduction");
    const auto t = make_triple(primes[0], primes[1], primes[2]);
    if (!a.k && t.degree() > cfg.degree_cap) fail(ErrorCode::DegreeCapExceeded, "profile exceeds the degree cap");
    chi.emplace(t);
  }
  auto value = [&](std::int64_t k) -> std::int64_t {
    const auto m = reduced.map_index(k);
    if (!m) return 0;
    std::optional<std::int64_t> d, c;
    if (dense) d = dense->at(m->k) * m->sign;
    if (chi) c = chi->coefficient(m->k) * m->sign;
    if (d && c && *d != *c)
      fail(ErrorCode::Mismatch, fmt::format("a_{}({}): dense {} but chi {}", a.n, k, *d, *c));
    return d ? *d : *c;
  };

  json params{{"n", a.n}, {"method", a.method}};
  if (a.k) {
    params["k"] = *a.k;
    const std::int64_t v = value(*a.k);
    if (cfg.as_json()) {
      emit(out, cfg, "coeff", params,
           json::array({json{{"n", a.n}, {"k", *a.k}, {"value", v}, {"reduced_n", reduced.n_reduced},
                             {"reduction", reduced.note()}}}));
    } else if (cfg.human()) {
      fmt::print(out, "a_{}({}) = {}", a.n, *a.k, v);
      if (a.method == "both") fmt::print(out, "  (dense and chi agree)");
      fmt::print(out, "\n");
    } else {
      fmt::print(out, "n,k,value\n{},{},{}\n", a.n, *a.k, v);
    }
    return kExitOk;
  }

  const std::int64_t degree = euler_phi(a.n);
  if (degree > cfg.degree_cap) fail(ErrorCode::DegreeCapExceeded, fmt::format("phi({}) = {} exceeds the cap", a.n, degree));
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1);
  std::int64_t height = 0;
  for (std::int64_t k = 0; k <= degree; ++k) {
    coeffs[static_cast<std::size_t>(k)] = value(k);
    height = std::max(height, std::abs(coeffs[static_cast<std::size_t>(k)]));
  }
  if (cfg.as_json()) {
    emit(out, cfg, "coeff", params,
         json::array({json{{"n", a.n}, {"degree", degree}, {"height", height}, {"reduced_n", reduced.n_reduced},
                           {"reduction", reduced.note()}, {"coefficients", coeffs}}}));
  } else if (cfg.human()) {
    fmt::print(out, "Phi_{}: degree {}, height {}\n", a.n, degree, height);
    for (std::size_t k = 0; k < coeffs.size(); k += 16) {
      const auto end = std::min(coeffs.size(), k + 16);
      std::vector<std::int64_t> row(coeffs.begin() + static_cast<std::ptrdiff_t>(k),
                                    coeffs.begin() + static_cast<std::ptrdiff_t>(end));
      fmt::print(out, "{:>8}: {}\n", k, fmt::join(row, " "));
    }
  } else {
    fmt::print(out, "k,value\n");
    for (std::size_t k = 0; k < coeffs.size(); ++k) fmt::print(out, "{},{}\n", k, coeffs[k]);
  }
  return kExitOk;
}

// height

int cmd_height(const RunConfig& cfg, std::int64_t n, const std::string& method, std::ostream& out) {
  HeightOptions opt;
  opt.degree_cap = cfg.degree_cap;
  opt.method = method == "chi" ? Method::chi : Method::dense;
  opt.parallelism = cfg.parallelism;
  const auto h = height(n, opt);
  if (cfg.as_json()) {
    emit(out, cfg, "height", json{{"n", n}, {"method", method}},
         json::array({json{{"n", n}, {"reduced_n", h.reduced_n}, {"height", h.height}, {"smallest_k", h.smallest_k},
                           {"value_at_k", h.value_at_k}, {"reduction", h.reduction_note}}}));
  } else if (cfg.human()) {
    fmt::print(out, "A({}) = {}  (attained first at k = {} of Phi_{}, value {}; {})\n", n, h.height, h.smallest_k,
               h.reduced_n, h.value_at_k, h.reduction_note);
  } else {
    fmt::print(out, "n,reduced_n,height,smallest_k,value_at_k\n{},{},{},{},{}\n", n, h.reduced_n, h.height,
               h.smallest_k, h.value_at_k);
  }
  return kExitOk;
}

// table1

int cmd_table1(const RunConfig& cfg, const std::string& method, std::ostream& out, std::ostream& err) {
  HeightOptions opt;
  opt.degree_cap = cfg.degree_cap;
  opt.method = method == "chi" ? Method::chi : Method::dense;
  opt.parallelism = cfg.parallelism;
  json results = json::array();
  bool all_match = true;
  if (cfg.human())
    fmt::print(out, "{:>3}  {:>12}  {:>7}  {:>4}  {:>7}  {:>6}  {}\n", "p", "n", "factors", "A(n)", "k", "a(k)", "status");
  if (cfg.format == "csv") fmt::print(out, "p,q,r,n,height,smallest_k,value,match\n");
  for (const auto& row : reference::kTable1) {
    const auto h = height(row.n(), opt);
    const bool match = h.height == row.max_height && h.smallest_k == row.smallest_k && h.value_at_k == row.value;
    if (!match) {
      all_match = false;
      fmt::print(err, "mismatch for n = {}: got (A={}, k={}, a={}), expected (A={}, k={}, a={})\n", row.n(),
                 h.height, h.smallest_k, h.value_at_k, row.max_height, row.smallest_k, row.value);
    }
    if (cfg.as_json()) {
      results.push_back(json{{"p", row.p}, {"q", row.q}, {"r", row.r}, {"n", row.n()}, {"height", h.height},
                             {"smallest_k", h.smallest_k}, {"value", h.value_at_k}, {"match", match}});
    } else if (cfg.human()) {
      fmt::print(out, "{:>3}  {:>12}  {:>7}  {:>4}  {:>7}  {:>+6}  {}\n", row.p, row.n(), triple_text(row.p, row.q, row.r),
                 h.height, h.smallest_k, h.value_at_k, match ? "ok" : "MISMATCH");
    } else {
      fmt::print(out, "{},{},{},{},{},{},{},{}\n", row.p, row.q, row.r, row.n(), h.height, h.smallest_k, h.value_at_k,
                 match ? "true" : "false");
    }
  }
  if (cfg.as_json()) emit(out, cfg, "table1", json{{"method", method}}, results);
  return all_match ? kExitOk : kExitMismatch;
}

// mpq

json mpq_json(const MpqResult& r) {
  const std::int64_t bound = beiter_bound_mpq(r.p, r.q);
  json classes = json::array();
  for (const auto& c : r.per_class)
    classes.push_back(json{{"residue", c.cls.residue}, {"witness", c.cls.witness_prime}, {"height", c.height},
                           {"smallest_k", c.smallest_k}, {"value_at_k", c.value_at_k}});
  return json{{"p", r.p},
              {"q", r.q},
              {"value", r.value},
              {"attaining_residue", r.attaining_class.residue},
              {"witness", r.attaining_class.witness_prime},
              {"upper_bound", bound},
              {"saturated", r.value == bound},
              {"classes", classes}};
}

int cmd_mpq(const RunConfig& cfg, std::int64_t p, std::int64_t q, std::optional<std::int64_t> q_max,
            std::ostream& out, std::ostream& err) {
  auto cache = open_cache(cfg, err);
  MpqOptions opt;
  opt.degree_cap = cfg.degree_cap;
  opt.parallelism = cfg.parallelism;
  opt.cache = cache.get();
  std::vector<MpqResult> results;
  if (q_max) {
    mp_lower_bound_search(p, q, *q_max, opt, [&](const MpqResult& r) { results.push_back(r); });
  } else {
    results.push_back(m_of_p_q(p, q, opt));
  }

  json params{{"p", p}, {"q", q}};
  if (q_max) params["q_max"] = *q_max;
  if (cfg.as_json()) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(mpq_json(r));
    emit(out, cfg, "mpq", params, arr);
  } else if (cfg.format == "csv") {
    fmt::print(out, "p,q,residue,witness,height,smallest_k,value_at_k\n");
    for (const auto& r : results)
      for (const auto& c : r.per_class)
        fmt::print(out, "{},{},{},{},{},{},{}\n", r.p, r.q, c.cls.residue, c.cls.witness_prime, c.height,
                   c.smallest_k, c.value_at_k);
  } else {
    std::int64_t best = 0, best_q = 0;
    for (const auto& r : results) {
      const std::int64_t bound = beiter_bound_mpq(r.p, r.q);
      fmt::print(out, "M({};{}) = {}  (class +-{} mod {}, witness r = {}; upper bound m(q^-1) = {}{})\n", r.p, r.q,
                 r.value, r.attaining_class.residue, r.p * r.q, r.attaining_class.witness_prime, bound,
                 r.value == bound ? ", saturated" : "");
      if (r.value > best) best = r.value, best_q = r.q;
    }
    if (q_max) fmt::print(out, "M({}) >= {}  (first reached at q = {})\n", p, best, best_q);
  }
  return kExitOk;
}

// verify

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::int64_t trials, std::ostream& out,
               std::ostream& err) {
  SuiteOptions opt;
  opt.trials = trials;
  opt.seed = cfg.seed;
  opt.degree_cap = cfg.degree_cap;
  opt.parallelism = cfg.parallelism;
  const auto rep = run_suite(suite, opt);

  if (cfg.as_json()) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped},
                            {"first_failure", c.first_failure}});
    emit(out, cfg, "verify", json{{"suite", suite}, {"trials", trials}},
         json::array({json{{"suite", rep.suite}, {"trials", rep.trials}, {"ok", rep.ok()}, {"checks", checks}}}));
  } else if (cfg.format == "csv") {
    fmt::print(out, "suite,check,passed,failed,skipped\n");
    for (const auto& c : rep.checks)
      fmt::print(out, "{},{},{},{},{}\n", rep.suite, c.name, c.passed, c.failed, c.skipped);
  } else {
    fmt::print(out, "suite {} (seed {}, {} trials): {}\n", rep.suite, rep.seed, rep.trials, rep.ok() ? "PASS" : "FAIL");
    for (const auto& c : rep.checks)
      fmt::print(out, "  {:<24} {:>7} passed {:>4} failed {:>5} skipped\n", c.name, c.passed, c.failed, c.skipped);
  }
  for (const auto& c : rep.checks)
    if (c.failed > 0) fmt::print(err, "{}: first counterexample: {}\n", c.name, c.first_failure);
  return rep.ok() ? kExitOk : kExitVerificationFailure;
}

// analyze

int cmd_analyze(const RunConfig& cfg, std::int64_t p, std::int64_t q, std::int64_t r, std::optional<std::int64_t> i,
                std::optional<std::int64_t> j, std::ostream& out) {
  const auto t = make_triple(p, q, r);
  std::int64_t index = 0;
  if (i) {
    index = *i;
  } else {
    HeightOptions opt;
    opt.degree_cap = cfg.degree_cap;
    index = height(t.n(), opt).smallest_k;
  }
  const auto a = analyze_structure(t, index, j);
  const auto& ctx = a.context;
  const auto& cls = a.classification;
  const ChiEvaluator chi(t);
  const std::int64_t tail = chi.tail_sum(index, ctx.j);
  const std::int64_t max_tail = chi.max_tail(index);
  std::set<std::int64_t> spectrum;
  for (const auto& c : cls.per_v) spectrum.insert(c.h_q);
  const auto s = static_cast<std::int64_t>(cls.special.size());
  const auto nn = static_cast<std::int64_t>(cls.null.size());
  const bool chain = satisfies_chain(p, t.q_p_star, t.r_p_star);

  if (cfg.as_json()) {
    json per_v = json::array();
    for (const auto& c : cls.per_v)
      per_v.push_back(json{{"v", c.v}, {"kind", std::string(to_string(c.kind))}, {"low", c.low},
                           {"bracket", c.bracket_v}, {"bracket_shift", c.bracket_v_shift}, {"h", c.h}, {"h_q", c.h_q},
                           {"c11", c.c11}, {"c12", c.c12}, {"c21", c.c21}, {"c22", c.c22}});
    json checks = json::array();
    for (const auto& c : a.checks)
      checks.push_back(json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"instances", c.instances},
                            {"failures", c.failures}, {"detail", c.detail}});
    json res{{"p", p}, {"q", q}, {"r", r}, {"i", index}, {"j", ctx.j},
             {"q_p_star", t.q_p_star}, {"r_p_star", t.r_p_star}, {"p_q_star", t.p_q_star},
             {"chain", chain}, {"tail_sum", tail}, {"max_tail_over_j", max_tail},
             {"sizes", json{{"S", s}, {"P+", cls.plain_plus.size()}, {"P-", cls.plain_minus.size()}, {"N", nn}}},
             {"s_minus_n", s - nn}, {"floor_p_over_3", p / 3},
             {"v0", cls.v0 ? json(*cls.v0) : json(nullptr)}, {"s0", cls.s0},
             {"h_q_spectrum", spectrum}, {"per_v", per_v}, {"checks", checks}};
    json params{{"p", p}, {"q", q}, {"r", r}};
    if (i) params["i"] = *i;
    if (j) params["j"] = *j;
    emit(out, cfg, "analyze", params, json::array({res}));
  } else if (cfg.format == "csv") {
    fmt::print(out, "v,kind,low,bracket,bracket_shift,h,h_q,c11,c12,c21,c22\n");
    for (const auto& c : cls.per_v)
      fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{}\n", c.v, to_string(c.kind), int(c.low), c.bracket_v,
                 c.bracket_v_shift, c.h, c.h_q, int(c.c11), int(c.c12), int(c.c21), int(c.c22));
  } else {
    fmt::print(out, "triple {}  i = {}  j = {}\n", triple_text(p, q, r), index, ctx.j);
    fmt::print(out, "q_p* = {}  r_p* = {}  p_q* = {}  chain inequalities: {}\n", t.q_p_star, t.r_p_star, t.p_q_star,
               chain ? "hold" : "do not hold");
    fmt::print(out, "sum over m >= j: {}   max over all j: {}\n\n", tail, max_tail);
    fmt::print(out, "{:>4}  {:<4} {:<4} {:>5} {:>7} {:>5} {:>5}  C-sets\n", "v", "kind", "", "[v]", "[v-r*]", "h", "h_q");
    for (const auto& c : cls.per_v) {
      std::string sets;
      for (auto [flag, name] : {std::pair{c.c11, "C11"}, {c.c12, "C12"}, {c.c21, "C21"}, {c.c22, "C22"}})
        if (flag) sets += std::string(sets.empty() ? "" : " ") + name;
      fmt::print(out, "{:>4}  {:<4} {:<4} {:>5} {:>7} {:>5} {:>5}  {}\n", c.v, to_string(c.kind), c.low ? "low" : "high",
                 c.bracket_v, c.bracket_v_shift, c.h, c.h_q, sets);
    }
    fmt::print(out, "\n|S| = {}  |P+| = {}  |P-| = {}  |N| = {}  |S|-|N| = {}  (floor(p/3) = {})\n", s,
               cls.plain_plus.size(), cls.plain_minus.size(), nn, s - nn, p / 3);
    fmt::print(out, "v0 = {}  S0 = {{{}}}  h_q spectrum = {{{}}}\n\n", cls.v0 ? std::to_string(*cls.v0) : "none",
               fmt::join(cls.s0, ", "), fmt::join(spectrum, ", "));
    for (const auto& c : a.checks)
      fmt::print(out, "  {:<24} {:<8} {:>6} instances  {}\n", c.name, to_string(c.status), c.instances, c.detail);
  }
  return a.all_ok() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients and heights of ternary cyclotomic polynomials", "cyclo"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "Height cache file (default: $CYCLO_CACHE)");
  app.add_option("--degree-cap", cfg.degree_cap, "Largest polynomial degree computed densely")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--parallelism", cfg.parallelism, "Worker threads")->check(CLI::Range(1U, 1024U))->capture_default_str();

  const auto methods = CLI::IsMember({"dense", "chi", "both"});

  CoeffArgs coeff;
  std::int64_t k_value = 0;
  auto* c_coeff = app.add_subcommand("coeff", "Print a_n(k), or every coefficient of Phi_n when --k is absent.\n"
                                              "CSV columns: k,value");
  c_coeff->add_option("--n", coeff.n, "Index n >= 3")->required();
  auto* k_opt = c_coeff->add_option("--k", k_value, "Coefficient index (any integer)");
  c_coeff->add_option("--method", coeff.method, "dense, chi, or both (asserts agreement)")->check(methods);

  std::int64_t h_n = 0;
  std::string h_method = "dense";
  auto* c_height = app.add_subcommand("height", "Height A(n) and the first index attaining it.\n"
                                                "CSV columns: n,reduced_n,height,smallest_k,value_at_k");
  c_height->add_option("--n", h_n, "Index n >= 3")->required();
  c_height->add_option("--method", h_method, "dense or chi")->check(CLI::IsMember({"dense", "chi"}));

  std::string t_method = "dense";
  auto* c_table1 = app.add_subcommand("table1", "Recompute the smallest n = pqr with A(n) = M(p) for six primes p.\n"
                                                "CSV columns: p,q,r,n,height,smallest_k,value,match");
  c_table1->add_option("--method", t_method, "dense or chi")->check(CLI::IsMember({"dense", "chi"}));

  std::int64_t m_p = 0, m_q = 0, m_qmax = 0;
  auto* c_mpq = app.add_subcommand("mpq", "Exact M(p;q) over all residue classes of r mod pq.\n"
                                          "CSV columns: p,q,residue,witness,height,smallest_k,value_at_k");
  c_mpq->add_option("--p", m_p, "Odd prime p")->required();
  c_mpq->add_option("--q", m_q, "Prime q > p (lower end of the scan with --q-max)")->required();
  auto* qmax_opt = c_mpq->add_option("--q-max", m_qmax, "Scan every prime q up to this bound");

  std::string v_suite;
  std::int64_t v_trials = -1;
  auto* c_verify = app.add_subcommand("verify", "Run a seeded verification suite.\n"
                                                "CSV columns: suite,check,passed,failed,skipped");
  c_verify->add_option("--suite", v_suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  c_verify->add_option("--trials", v_trials, "Number of random instances (suite default when omitted)");

  std::int64_t a_p = 0, a_q = 0, a_r = 0, a_i = 0, a_j = 0;
  auto* c_analyze = app.add_subcommand("analyze", "Classify every v in [0, p-1] for a coefficient of Phi_pqr.\n"
                                                  "CSV columns: v,kind,low,bracket,bracket_shift,h,h_q,c11,c12,c21,c22");
  c_analyze->add_option("--p", a_p)->required();
  c_analyze->add_option("--q", a_q)->required();
  c_analyze->add_option("--r", a_r)->required();
  auto* i_opt = c_analyze->add_option("--i", a_i, "Coefficient index (default: first index attaining the height)");
  auto* j_opt = c_analyze->add_option("--j", a_j, "Split point (default: the lower summation limit for i)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*c_coeff) {
      if (*k_opt) coeff.k = k_value;
      return cmd_coeff(cfg, coeff, out);
    }
    if (*c_height) return cmd_height(cfg, h_n, h_method, out);
    if (*c_table1) return cmd_table1(cfg, t_method, out, err);
    if (*c_mpq) return cmd_mpq(cfg, m_p, m_q, *qmax_opt ? std::optional(m_qmax) : std::nullopt, out, err);
    if (*c_verify) return cmd_verify(cfg, v_suite, v_trials, out, err);
    if (*c_analyze)
      return cmd_analyze(cfg, a_p, a_q, a_r, *i_opt ? std::optional(a_i) : std::nullopt,
                         *j_opt ? std::optional(a_j) : std::nullopt, out);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitVerificationFailure;
  }
  return kExitBadInput;
}

}  // namespace cyclo::cli
