#pragma once

// Exhaustive and sampled censuses of H_d over small prime fields.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cremona/cremona.hpp"

namespace cremona {

class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::uint64_t kDefaultCensusBudget = std::uint64_t{1} << 24;
inline constexpr const char* kSampleGenerator = "mt19937_64";

struct CensusOptions {
  unsigned partitions = 1;
  std::uint64_t budget = kDefaultCensusBudget;
  /// Worker threads; 0 picks min(partitions, hardware concurrency).
  unsigned threads = 0;
};

struct CensusReport {
  std::string mode;  // "enumerate" or "sample"
  std::size_t n = 0;
  unsigned d = 0;
  std::uint64_t p = 0;
  /// Projective classes in W_d(F_p): (p^N - 1)/(p - 1), N = (n+1) * dim k[x]_d.
  std::uint64_t total_classes = 0;
  /// Classes passed through certification.
  std::uint64_t examined = 0;
  /// Classes with a verified inverse: points of H_d(F_p) among those examined.
  std::uint64_t birational = 0;
  /// Reduced degree -> number of birational classes.
  std::map<unsigned, std::uint64_t> strata;
  /// Certified classes whose certificate failed independent re-verification.
  std::uint64_t certificate_failures = 0;
  unsigned partitions = 1;
  std::optional<std::uint64_t> seed;
  std::string generator;
  double seconds = 0.0;  // wall clock, not part of the structured identity

  /// Equality of every counted field; ignores wall-clock time.
  friend bool same_counts(const CensusReport& a, const CensusReport& b) {
    return a.mode == b.mode && a.n == b.n && a.d == b.d && a.p == b.p && a.total_classes == b.total_classes &&
           a.examined == b.examined && a.birational == b.birational && a.strata == b.strata &&
           a.certificate_failures == b.certificate_failures && a.seed == b.seed && a.generator == b.generator;
  }
};

/// Number of coefficients of a tuple: (n+1) * dim k[x0..xn]_d.
std::uint64_t coefficient_count(std::size_t n, unsigned d);
/// (p^N - 1)/(p - 1); throws BudgetExceeded if it does not fit in 64 bits.
std::uint64_t class_count(std::size_t n, unsigned d, std::uint64_t p);

/// The index-th canonical coefficient vector (first nonzero entry 1). Classes
/// are ordered by the position of the leading 1, then by the trailing entries
/// read as a base-p number with the last coordinate least significant.
std::vector<std::uint64_t> class_vector(std::uint64_t index, std::size_t length, std::uint64_t p);
MapTuple tuple_from_vector(std::size_t n, unsigned d, const Field& field, std::span<const std::uint64_t> coeffs);

CensusReport enumerate_hd(std::size_t n, unsigned d, std::uint64_t p, const CensusOptions& options = {});
CensusReport sample_random(std::size_t n, unsigned d, std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                           const CensusOptions& options = {});

}  // namespace cremona
