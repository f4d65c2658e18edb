#include "cremona/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

namespace cremona {

std::uint64_t coefficient_count(std::size_t n, unsigned d) { return (n + 1) * monomial_count(n + 1, d); }

std::uint64_t class_count(std::size_t n, unsigned d, std::uint64_t p) {
  const std::uint64_t len = coefficient_count(n, d);
  // 1 + p + ... + p^(len-1)
  unsigned __int128 total = 0, power = 1;
  for (std::uint64_t i = 0; i < len; ++i) {
    total += power;
    power *= p;
    if (total > UINT64_MAX)
      throw BudgetExceeded("search space of W_" + std::to_string(d) + " over F_" + std::to_string(p) +
                           " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::uint64_t> class_vector(std::uint64_t index, std::size_t length, std::uint64_t p) {
  std::vector<std::uint64_t> v(length, 0);
  for (std::size_t lead = 0; lead < length; ++lead) {
    unsigned __int128 block = 1;
    for (std::size_t i = lead + 1; i < length; ++i) block *= p;
    if (index < block) {
      v[lead] = 1;
      for (std::size_t i = length; i-- > lead + 1;) {
        v[i] = index % p;
        index /= p;
      }
      return v;
    }
    index -= static_cast<std::uint64_t>(block);
  }
  throw std::out_of_range("class index out of range");
}

MapTuple tuple_from_vector(std::size_t n, unsigned d, const Field& field, std::span<const std::uint64_t> coeffs) {
  const auto monos = monomials_of_degree(n + 1, d);
  if (coeffs.size() != (n + 1) * monos.size()) throw ShapeError("coefficient vector has the wrong length");
  std::vector<HomogeneousPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const std::uint64_t c = coeffs[i * monos.size() + k];
      if (c) terms.push_back(Term{monos[k], Scalar::from_int(field, static_cast<long>(c))});
    }
    comps.push_back(HomogeneousPoly::from_terms(field, n + 1, std::move(terms), d));
  }
  return MapTuple(std::move(comps));
}

namespace {

struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t birational = 0;
  std::uint64_t failures = 0;
  std::map<unsigned, std::uint64_t> strata;

  void merge(const Tally& o) {
    examined += o.examined;
    birational += o.birational;
    failures += o.failures;
    for (const auto& [k, v] : o.strata) strata[k] += v;
  }
};

void examine(Tally& tally, std::size_t n, unsigned d, const Field& field, std::uint64_t index, std::size_t len) {
  const auto v = class_vector(index, len, field.characteristic());
  ++tally.examined;
  if (auto f = certify_birational(tuple_from_vector(n, d, field, v))) {
    ++tally.birational;
    ++tally.strata[f->degree()];
    if (!f->verify()) ++tally.failures;
  }
}

/// Runs `work(partition, tally)` for every partition; tallies merge in partition order.
template <class Work>
Tally run_partitions(unsigned partitions, unsigned threads, Work work) {
  std::vector<Tally> tallies(partitions);
  if (threads == 0) threads = std::max(1u, std::min(partitions, std::thread::hardware_concurrency()));
  threads = std::min(threads, partitions);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned k; (k = next.fetch_add(1)) < partitions;) work(k, tallies[k]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  Tally total;
  for (const auto& t : tallies) total.merge(t);
  return total;
}

CensusReport make_report(const char* mode, std::size_t n, unsigned d, std::uint64_t p, const Tally& t,
                         unsigned partitions) {
  CensusReport r;
  r.mode = mode;
  r.n = n;
  r.d = d;
  r.p = p;
  r.total_classes = class_count(n, d, p);
  r.examined = t.examined;
  r.birational = t.birational;
  r.strata = t.strata;
  r.certificate_failures = t.failures;
  r.partitions = partitions;
  return r;
}

void check_args(std::size_t n, unsigned d, const CensusOptions& options) {
  if (n < 1) throw ShapeError("census needs n >= 1");
  if (d < 1) throw ShapeError("census needs d >= 1");
  if (options.partitions < 1) throw ShapeError("census needs at least one partition");
}

}  // namespace

CensusReport enumerate_hd(std::size_t n, unsigned d, std::uint64_t p, const CensusOptions& options) {
  check_args(n, d, options);
  const Field field = Field::prime(p);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = class_count(n, d, p);
  if (total > options.budget)
    throw BudgetExceeded(std::to_string(total) + " classes exceed the budget of " + std::to_string(options.budget));
  const std::size_t len = coefficient_count(n, d);
  const unsigned parts = options.partitions;
  // Contiguous index ranges, i.e. ranges of leading-coefficient prefixes.
  const Tally tally = run_partitions(parts, options.threads, [&](unsigned k, Tally& t) {
    const std::uint64_t lo = total / parts * k + std::min<std::uint64_t>(k, total % parts);
    const std::uint64_t hi = lo + total / parts + (k < total % parts ? 1 : 0);
    for (std::uint64_t i = lo; i < hi; ++i) examine(t, n, d, field, i, len);
  });
  CensusReport r = make_report("enumerate", n, d, p, tally, parts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling; avoids the implementation-defined std distributions.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

CensusReport sample_random(std::size_t n, unsigned d, std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                           const CensusOptions& options) {
  check_args(n, d, options);
  const Field field = Field::prime(p);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = class_count(n, d, p);
  if (std::min(trials, total) > options.budget)
    throw BudgetExceeded(std::to_string(trials) + " trials exceed the budget of " + std::to_string(options.budget));

  // Distinct class indices, drawn without replacement (Floyd's algorithm).
  std::vector<std::uint64_t> indices;
  if (trials >= total) {
    indices.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) indices[i] = i;
  } else {
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(trials * 2);
    for (std::uint64_t j = total - trials; j < total; ++j) {
      const std::uint64_t t = uniform_below(rng, j + 1);
      chosen.insert(chosen.count(t) ? j : t);
    }
    indices.assign(chosen.begin(), chosen.end());
    std::sort(indices.begin(), indices.end());
  }

  const std::size_t len = coefficient_count(n, d);
  const unsigned parts = options.partitions;
  const std::size_t count = indices.size();
  const Tally tally = run_partitions(parts, options.threads, [&](unsigned k, Tally& t) {
    for (std::size_t i = k; i < count; i += parts) examine(t, n, d, field, indices[i], len);
  });
  CensusReport r = make_report("sample", n, d, p, tally, parts);
  r.seed = seed;
  r.generator = kSampleGenerator;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cremona
