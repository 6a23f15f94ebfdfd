#include "cyclo/ternary.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <string>

#include "cyclo/checked.hpp"
#include "cyclo/error.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo {

namespace {

void finish_profile(CoefficientVector& out) {
  out.height = 0;
  out.argmax = 0;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    std::int64_t a = out.coeffs[k] < 0 ? -std::int64_t{out.coeffs[k]} : out.coeffs[k];
    if (a > out.height) {
      out.height = a;
      out.argmax = static_cast<std::int64_t>(k);
    }
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CoefficientVector dense_phi(std::int64_t n, std::int64_t degree_cap) {
  if (n < 3 || n % 2 == 0)
    fail(ErrorCode::InvalidArgument, "dense_phi needs odd n >= 3, got " + std::to_string(n));
  const auto primes = distinct_prime_factors(n);
  std::int64_t radical = 1;
  for (auto f : primes) radical *= f;
  if (radical != n) fail(ErrorCode::InvalidArgument, std::to_string(n) + " is not squarefree");
  if (primes.size() > 3)
    fail(ErrorCode::TooManyPrimeFactors, std::to_string(n) + " has more than 3 prime factors");

  std::int64_t degree = 1;
  for (auto f : primes) degree = checked_mul(degree, f - 1);
  if (degree > degree_cap)
    fail(ErrorCode::DegreeCapExceeded, "phi(" + std::to_string(n) + ") = " + std::to_string(degree) +
                                           " exceeds cap " + std::to_string(degree_cap));

  // Divisor d of n contributes (1 - x^d)^{mu(n/d)}; mu(n/d) = (-1)^{#primes missing from d}.
  std::vector<std::int64_t> numerators, denominators;
  const std::size_t w = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
    std::int64_t d = 1;
    std::size_t missing = w;
    for (std::size_t b = 0; b < w; ++b)
      if (mask & (std::size_t{1} << b)) {
        d *= primes[b];
        --missing;
      }
    (missing % 2 == 0 ? numerators : denominators).push_back(d);
  }

  CoefficientVector out;
  out.n = n;
  out.degree = degree;
  out.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0);
  auto& c = out.coeffs;
  c[0] = 1;
  const auto top = static_cast<std::size_t>(degree);

  // Factors with d > degree are 1 modulo x^{degree+1}.
  for (std::int64_t d : numerators) {
    if (d > degree) continue;
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t i = top; i >= step; --i) c[i] = checked_sub(c[i], c[i - step]);
  }
  for (std::int64_t d : denominators) {
    if (d > degree) continue;
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t i = step; i <= top; ++i) c[i] = checked_add(c[i], c[i - step]);
  }
  finish_profile(out);
  return out;
}

std::string ReducedIndex::note() const {
  if (even_reduction && square_reduction) return "even-reduction+square-reduction";
  if (even_reduction) return "even-reduction";
  if (square_reduction) return "square-reduction";
  return "no-op";
}

std::optional<ReducedIndex::Mapped> ReducedIndex::map_index(std::int64_t k) const {
  if (k < 0 || floor_mod(k, stretch) != 0) return std::nullopt;
  Mapped m;
  m.k = k / stretch;
  m.sign = (even_reduction && (m.k % 2 != 0)) ? -1 : 1;
  return m;
}

ReducedIndex reduce_index(std::int64_t n_raw) {
  if (n_raw < 3) fail(ErrorCode::InvalidArgument, "index must be >= 3");
  ReducedIndex out;
  out.n_raw = n_raw;
  std::int64_t full_radical = 1;
  for (auto f : distinct_prime_factors(n_raw)) full_radical *= f;
  out.n_reduced = odd_squarefree_radical(n_raw);
  out.even_reduction = n_raw % 2 == 0;
  out.stretch = n_raw / full_radical;
  out.square_reduction = out.stretch > 1;
  if (out.n_reduced == 1)
    fail(ErrorCode::TrivialResult, std::to_string(n_raw) + " is a power of two; height is 1");
  return out;
}

ChiContext::ChiContext(const PrimeTriple& triple, std::int64_t k)
    : triple_(triple), k_(k), k_mod_(floor_mod(k, triple.pq())) {}

int ChiContext::operator()(std::int64_t m) const {
  const std::int64_t pq = triple_.pq();
  const std::int64_t mr = floor_mod(m, pq) * triple_.r % pq;
  // Representatives in [1, pq] of k + 1 - mr - q and k + 1 - mr.
  std::int64_t plus = floor_mod(k_mod_ + 1 - mr - triple_.q, pq);
  std::int64_t minus = floor_mod(k_mod_ + 1 - mr, pq);
  if (plus == 0) plus = pq;
  if (minus == 0) minus = pq;
  const bool is_plus = plus <= triple_.p;
  const bool is_minus = minus <= triple_.p;
  ensure(!(is_plus && is_minus), "chi is both +1 and -1");
  return is_plus ? 1 : (is_minus ? -1 : 0);
}

std::int64_t m_zero(const PrimeTriple& t, std::int64_t k) {
  return ceil_div(checked_add(k, (t.p - 1) * (t.q - 1)), t.r);
}

ChiEvaluator::ChiEvaluator(const PrimeTriple& triple)
    : triple_(triple), table_(build_binary_table(triple.p, triple.q)),
      r_inv_(mod_inverse(triple.r, triple.pq())) {}

std::vector<std::pair<std::int64_t, int>> ChiEvaluator::chi_support(std::int64_t k) const {
  const std::int64_t pq = triple_.pq();
  const std::int64_t km = floor_mod(k, pq);
  std::vector<std::pair<std::int64_t, int>> out;
  out.reserve(static_cast<std::size_t>(2 * triple_.p));
  for (std::int64_t t = 1; t <= triple_.p; ++t) {
    out.emplace_back(floor_mod(km + 1 - triple_.q - t, pq) * r_inv_ % pq, +1);
    out.emplace_back(floor_mod(km + 1 - t, pq) * r_inv_ % pq, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ChiEvaluator::coefficient(std::int64_t k) const {
  if (k < 0 || k > triple_.degree()) return 0;
  const std::int64_t pq = triple_.pq();
  const std::int64_t lo = std::max<std::int64_t>(0, m_zero(triple_, k));
  const std::int64_t km = k % pq;
  const std::int8_t* a = table_.coefficients().data();
  // m_t = (km + 1 - q - t) r^-1 for the +1 string and (km + 1 - t) r^-1 for
  // the -1 string; consecutive t differ by -r^-1 mod pq.
  std::int64_t mp = floor_mod(km - triple_.q, pq) * r_inv_ % pq;
  std::int64_t mm = km * r_inv_ % pq;
  std::int64_t sum = 0;
  for (std::int64_t t = 1; t <= triple_.p; ++t) {
    if (mp >= lo) sum += a[mp];
    if (mm >= lo) sum -= a[mm];
    mp -= r_inv_;
    if (mp < 0) mp += pq;
    mm -= r_inv_;
    if (mm < 0) mm += pq;
  }
  return sum;
}

std::int64_t ChiEvaluator::coefficient_scan(std::int64_t k) const {
  if (k < 0 || k > triple_.degree()) return 0;
  const ChiContext ctx(triple_, k);
  std::int64_t sum = 0;
  for (std::int64_t m = std::max<std::int64_t>(0, m_zero(triple_, k)); m < triple_.pq(); ++m) {
    const int a = table_.coefficient(m);
    if (a != 0) sum += a * ctx(m);
  }
  return sum;
}

std::int64_t ChiEvaluator::tail_sum(std::int64_t k, std::int64_t j) const {
  std::int64_t sum = 0;
  for (auto [m, c] : chi_support(k))
    if (m >= j) sum += table_.coefficient(m) * c;
  return sum;
}

std::int64_t ChiEvaluator::max_tail(std::int64_t k) const {
  const auto support = chi_support(k);
  std::int64_t best = 0, running = 0;
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    running += table_.coefficient(it->first) * it->second;
    best = std::max(best, running < 0 ? -running : running);
  }
  return best;
}

std::int64_t ternary_coefficient_chi(const PrimeTriple& triple, std::int64_t k) {
  return ChiEvaluator(triple).coefficient(k);
}

std::int64_t sum_zero_check(const PrimeTriple& triple, std::int64_t k) {
  const auto table = build_binary_table(triple.p, triple.q);
  const ChiContext ctx(triple, k);
  std::int64_t sum = 0;
  for (std::int64_t m : table.support()) sum += table.coefficient(m) * ctx(m);
  return sum;
}

CrossValidationReport cross_validate(const PrimeTriple& triple, std::int64_t degree_cap,
                                     unsigned parallelism) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto dense = dense_phi(triple.n(), degree_cap);
  const double dense_seconds = seconds_since(t0);
  auto report = cross_validate(triple, dense, parallelism);
  report.dense_seconds = dense_seconds;
  return report;
}

CrossValidationReport cross_validate(const PrimeTriple& triple, const CoefficientVector& dense,
                                     unsigned parallelism) {
  if (dense.n != triple.n())
    fail(ErrorCode::InvalidArgument, "profile does not belong to the triple");
  const auto t0 = std::chrono::steady_clock::now();
  const ChiEvaluator chi(triple);
  const std::size_t count = static_cast<std::size_t>(dense.degree) + 1;
  std::mutex guard;
  std::int64_t bad = -1;

  parallel_for_chunks(count, parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      if (chi.coefficient(static_cast<std::int64_t>(k)) != dense.coeffs[k]) {
        std::lock_guard lock(guard);
        if (bad < 0 || static_cast<std::int64_t>(k) < bad) bad = static_cast<std::int64_t>(k);
        return;
      }
    }
  });
  if (bad >= 0)
    fail(ErrorCode::Mismatch, "k = " + std::to_string(bad) + ": dense " +
                                  std::to_string(dense.at(bad)) + ", chi " +
                                  std::to_string(chi.coefficient(bad)));

  CrossValidationReport report;
  report.triple = triple;
  report.coefficients_checked = static_cast<std::int64_t>(count);
  report.max_index = dense.degree;
  report.height = dense.height;
  report.chi_seconds = seconds_since(t0);
  return report;
}

}  // namespace cyclo
