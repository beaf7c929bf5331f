#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wordentropy/renorm.hpp"

namespace wordentropy {

/// Lower end of the admissible epsilon window, 2 log log k / log k.
double epsilon_window_lower(double k);

/// Smallest k beyond which every larger k satisfies
/// 2 log log k / log k <= eps. Returned as a double; it overflows 64 bits
/// for eps below about 0.14.
double minimal_k_for_epsilon(double eps);

/// Census of the b-to-b gaps r_j = s_j |a| + |b| that fall in
/// [(1 - eps) k, 2k), bucketed by (1 + (r-1) eps) k <= r_j < (1 + r eps) k for
/// r = 0 .. ceil(1/eps).
struct GapCensus {
  std::uint64_t k = 0;
  double epsilon = 0.0;
  bool heuristic = false;  // epsilon window lower bound was overridden
  std::vector<std::uint64_t> gaps;  // distinct, ascending
  std::map<std::uint64_t, std::size_t> multiplicity;
  std::vector<std::size_t> bucket_counts;  // index r
  std::vector<std::uint64_t> t;            // t_r = floor((1 + (r+2) eps) k)
  std::uint64_t h = 0;                     // floor(eps k / |a|)

  std::size_t bucket_of(std::uint64_t gap) const;
  std::size_t bucket_count() const noexcept { return bucket_counts.size(); }

  /// (1 / eps) k^{(r+2) eps}, the most distinct gaps an admissible word can
  /// place in bucket r.
  double bucket_bound(std::size_t r) const;
  bool bucket_bounds_hold() const;
};

/// Census from a certificate's b-block exponents. Throws invalid_argument
/// unless eps lies in [2 log log k / log k, 1/4]; `heuristic_override`
/// drops the lower end (eps must still be in (0, 1/4]).
GapCensus gap_census(const Renormalization& r, std::uint64_t k, double epsilon,
                     bool heuristic_override = false);

/// Census over explicit gap values, same bucketing.
GapCensus gap_census_from_gaps(std::span<const std::uint64_t> gaps,
                               std::uint64_t k, std::size_t a_length,
                               double epsilon, bool heuristic_override = false);

/// Gaps filling every bucket up to its bound with the smallest admissible
/// values. This is the census that maximizes lambda-hat.
std::vector<std::uint64_t> extremal_gaps(std::uint64_t k, double epsilon);

struct CharacteristicModel {
  std::vector<std::uint64_t> gaps;
  std::uint64_t k = 0;
  std::uint64_t cutoff = 0;  // 2k
  double lambda_hat = 0.0;
  double log_lambda = 0.0;
  std::optional<double> sigma;  // k log(lambda) / log k, undefined at k = 1
  double residual = 0.0;        // RHS(lambda_hat) - 1
};

/// sum_j lambda^{-r_j} + lambda^{-cutoff} / (1 - 1/lambda), evaluated at
/// lambda = exp(log_lambda).
double characteristic_rhs(std::span<const std::uint64_t> gaps,
                          std::uint64_t cutoff, double log_lambda);

/// Unique lambda > 1 with RHS(lambda) = 1 for cutoff 2k. RHS decreases
/// strictly from +inf to 0, so bisection on log lambda always brackets it.
CharacteristicModel solve_characteristic(std::span<const std::uint64_t> gaps,
                                         std::uint64_t k, double tol = 1e-9);

}  // namespace wordentropy
