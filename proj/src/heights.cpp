#include "cyclo/heights.hpp"

#include <string>

#include "cyclo/checked.hpp"
#include "cyclo/error.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo {

std::string_view to_string(Method m) {
  return m == Method::dense ? "dense" : "chi";
}

namespace {

HeightReport chi_height(const ReducedIndex& reduced, const HeightOptions& options) {
  const auto primes = distinct_prime_factors(reduced.n_reduced);
  if (primes.size() != 3)
    fail(ErrorCode::InvalidArgument, "the chi method needs a ternary index");
  const auto triple = make_triple(primes[0], primes[1], primes[2]);
  if (triple.degree() > options.degree_cap)
    fail(ErrorCode::DegreeCapExceeded, "phi(" + std::to_string(triple.n()) + ") exceeds cap");
  const ChiEvaluator chi(triple);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(triple.degree()) + 1);
  parallel_for_chunks(coeffs.size(), options.parallelism, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) coeffs[k] = chi.coefficient(static_cast<std::int64_t>(k));
  });
  HeightReport out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::int64_t a = coeffs[k] < 0 ? -coeffs[k] : coeffs[k];
    if (a > out.height) {
      out.height = a;
      out.smallest_k = static_cast<std::int64_t>(k);
      out.value_at_k = coeffs[k];
    }
  }
  return out;
}

std::int64_t witness_degree(std::int64_t p, std::int64_t q, std::int64_t s) {
  return checked_mul(checked_mul(p - 1, q - 1), s - 1);
}

}  // namespace

HeightReport height(std::int64_t n, const HeightOptions& options) {
  const auto reduced = reduce_index(n);
  HeightReport out;
  if (options.method == Method::chi) {
    out = chi_height(reduced, options);
  } else {
    const auto profile = dense_phi(reduced.n_reduced, options.degree_cap);
    out.height = profile.height;
    out.smallest_k = profile.argmax;
    out.value_at_k = profile.coeffs[static_cast<std::size_t>(profile.argmax)];
  }
  out.n = n;
  out.reduced_n = reduced.n_reduced;
  out.method = options.method;
  out.reduction_note = reduced.note();
  return out;
}

std::vector<KaplanClass> enumerate_kaplan_classes(std::int64_t p, std::int64_t q, std::int64_t max_steps) {
  check_prime_pair(p, q);
  const std::int64_t pq = p * q;
  std::vector<KaplanClass> out;
  for (std::int64_t a = 1; 2 * a < pq; ++a) {
    if (a % p == 0 || a % q == 0) continue;
    const std::int64_t s_plus = next_prime_in_class(a, pq, q, max_steps);
    const std::int64_t s_minus = next_prime_in_class(pq - a, pq, q, max_steps);
    out.push_back(KaplanClass{a, std::min(s_plus, s_minus)});
  }
  ensure(static_cast<std::int64_t>(out.size()) * 2 == (p - 1) * (q - 1), "class count != phi(pq)/2");
  return out;
}

MpqResult m_of_p_q(std::int64_t p, std::int64_t q, const MpqOptions& options) {
  const auto classes = enumerate_kaplan_classes(p, q, options.max_steps);
  MpqResult out;
  out.p = p;
  out.q = q;
  out.per_class.resize(classes.size());

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.per_class[i].cls = classes[i];
    if (options.cache) {
      if (auto hit = options.cache->find(p, q, classes[i].residue)) {
        out.per_class[i].height = hit->height;
        out.per_class[i].smallest_k = hit->smallest_k;
        out.per_class[i].value_at_k = hit->value_at_k;
        out.per_class[i].cls.witness_prime = hit->witness;
        out.per_class[i].from_cache = true;
        continue;
      }
    }
    const std::int64_t deg = witness_degree(p, q, classes[i].witness_prime);
    if (deg > options.degree_cap)
      fail(ErrorCode::DegreeCapExceeded,
           "class " + std::to_string(classes[i].residue) + " (witness " +
               std::to_string(classes[i].witness_prime) + ") needs degree " + std::to_string(deg));
    todo.push_back(i);
  }

  parallel_for_each_index(todo.size(), options.parallelism, [&](std::size_t t) {
    auto& slot = out.per_class[todo[t]];
    const auto profile = dense_phi(p * q * slot.cls.witness_prime, options.degree_cap);
    slot.height = profile.height;
    slot.smallest_k = profile.argmax;
    slot.value_at_k = profile.coeffs[static_cast<std::size_t>(profile.argmax)];
    if (options.cache)
      options.cache->store(CacheRecord{p, q, slot.cls.residue, slot.cls.witness_prime, slot.height,
                                       slot.smallest_k, slot.value_at_k, std::string(kToolVersion)});
  });

  for (const auto& c : out.per_class) {
    if (c.height > out.value) {
      out.value = c.height;
      out.attaining_class = c.cls;
    }
  }
  return out;
}

MpSearchResult mp_lower_bound_search(std::int64_t p, std::int64_t q_lo, std::int64_t q_hi,
                                     const MpqOptions& options,
                                     const std::function<void(const MpqResult&)>& sink) {
  if (!is_prime(p) || p == 2) fail(ErrorCode::InvalidArgument, "p must be an odd prime");
  const auto qs = primes_in_range(std::max(q_lo, p + 1), q_hi);
  if (qs.empty()) fail(ErrorCode::InvalidArgument, "no prime q > p in the requested range");
  MpSearchResult out;
  out.p = p;
  for (std::int64_t q : qs) {
    auto result = m_of_p_q(p, q, options);
    if (sink) sink(result);
    out.scanned.emplace_back(q, result.value);
    if (result.value > out.best.value) {
      out.best_q = q;
      out.best = std::move(result);
    }
  }
  return out;
}

bool kaplan_invariance_check(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                             std::int64_t degree_cap) {
  make_triple(p, q, r);
  make_triple(p, q, s);
  const std::int64_t pq = p * q;
  if (floor_mod(s - r, pq) != 0 && floor_mod(s + r, pq) != 0)
    fail(ErrorCode::PreconditionViolated, std::to_string(s) + " is not +-" + std::to_string(r) +
                                              " mod " + std::to_string(pq));
  return dense_phi(p * q * r, degree_cap).height == dense_phi(p * q * s, degree_cap).height;
}

}  // namespace cyclo
