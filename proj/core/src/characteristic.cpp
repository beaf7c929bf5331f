#include "wordentropy/characteristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "wordentropy/error.hpp"

namespace wordentropy {

namespace {

void check_epsilon(std::uint64_t k, double epsilon, bool heuristic_override) {
  if (k < 2) throw Error(Errc::invalid_argument, "gap census needs k >= 2");
  if (!(epsilon > 0.0) || epsilon > 0.25) {
    throw Error(Errc::invalid_argument,
                fmt::format("epsilon {} outside (0, 1/4]", epsilon));
  }
  double lower = epsilon_window_lower(static_cast<double>(k));
  if (!heuristic_override && epsilon < lower) {
    throw Error(Errc::invalid_argument,
                fmt::format("epsilon {} below 2 log log k / log k = {} for k = "
                            "{}; needs k >= {:.3g}",
                            epsilon, lower, k, minimal_k_for_epsilon(epsilon)));
  }
}

std::size_t bucket_total(double epsilon) {
  return static_cast<std::size_t>(std::ceil(1.0 / epsilon)) + 1;
}

double bucket_lower(std::uint64_t k, double epsilon, std::size_t r) {
  return (1.0 + (static_cast<double>(r) - 1.0) * epsilon) * static_cast<double>(k);
}

}  // namespace

double epsilon_window_lower(double k) {
  double log_k = std::log(k);
  return 2.0 * std::log(log_k) / log_k;
}

double minimal_k_for_epsilon(double eps) {
  if (!(eps > 0.0)) throw Error(Errc::invalid_argument, "epsilon must be > 0");
  // g(x) = 2 log x / x with x = log k peaks at x = e and then decreases
  auto g = [](double x) { return 2.0 * std::log(x) / x; };
  double lo = std::exp(1.0);
  if (g(lo) <= eps) return std::exp(lo);
  double hi = 2.0 * lo;
  while (g(hi) > eps) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (g(mid) > eps ? lo : hi) = mid;
  }
  return std::ceil(std::exp(hi));
}

std::size_t GapCensus::bucket_of(std::uint64_t gap) const {
  for (std::size_t r = 0; r < bucket_counts.size(); ++r) {
    if (bucket_lower(k, epsilon, r) <= static_cast<double>(gap) &&
        static_cast<double>(gap) < bucket_lower(k, epsilon, r + 1)) {
      return r;
    }
  }
  throw Error(Errc::out_of_range,
              fmt::format("gap {} lies outside every bucket", gap));
}

double GapCensus::bucket_bound(std::size_t r) const {
  return std::pow(static_cast<double>(k), (static_cast<double>(r) + 2.0) * epsilon) /
         epsilon;
}

bool GapCensus::bucket_bounds_hold() const {
  for (std::size_t r = 0; r < bucket_counts.size(); ++r) {
    if (static_cast<double>(bucket_counts[r]) > bucket_bound(r)) return false;
  }
  return true;
}

GapCensus gap_census_from_gaps(std::span<const std::uint64_t> gaps,
                               std::uint64_t k, std::size_t a_length,
                               double epsilon, bool heuristic_override) {
  check_epsilon(k, epsilon, heuristic_override);
  if (a_length == 0) throw Error(Errc::invalid_argument, "|a| must be >= 1");
  GapCensus census;
  census.k = k;
  census.epsilon = epsilon;
  census.heuristic = heuristic_override &&
                     epsilon < epsilon_window_lower(static_cast<double>(k));
  census.h = static_cast<std::uint64_t>(
      std::floor(epsilon * static_cast<double>(k) / static_cast<double>(a_length)));
  const std::size_t buckets = bucket_total(epsilon);
  census.bucket_counts.assign(buckets, 0);
  for (std::size_t r = 0; r < buckets; ++r) {
    census.t.push_back(static_cast<std::uint64_t>(std::floor(
        (1.0 + (static_cast<double>(r) + 2.0) * epsilon) * static_cast<double>(k))));
  }
  const double low = (1.0 - epsilon) * static_cast<double>(k);
  for (std::uint64_t g : gaps) {
    if (static_cast<double>(g) >= low && g < 2 * k) ++census.multiplicity[g];
  }
  for (const auto& [gap, count] : census.multiplicity) {
    census.gaps.push_back(gap);
    ++census.bucket_counts[census.bucket_of(gap)];
  }
  return census;
}

GapCensus gap_census(const Renormalization& r, std::uint64_t k, double epsilon,
                     bool heuristic_override) {
  if (r.tokens.empty()) {
    throw Error(Errc::invalid_argument, "gap census needs a nonempty token stream");
  }
  std::vector<std::uint64_t> gaps;
  for (std::size_t exponent : r.gap_exponents()) {
    gaps.push_back(exponent * r.a.size() + r.b.size());
  }
  return gap_census_from_gaps(gaps, k, r.a.size(), epsilon, heuristic_override);
}

std::vector<std::uint64_t> extremal_gaps(std::uint64_t k, double epsilon) {
  check_epsilon(k, epsilon, true);
  const std::size_t buckets = bucket_total(epsilon);
  const auto low = static_cast<std::uint64_t>(
      std::ceil((1.0 - epsilon) * static_cast<double>(k)));
  std::vector<std::uint64_t> gaps;
  std::uint64_t g = low;
  GapCensus shape;
  shape.k = k;
  shape.epsilon = epsilon;
  shape.bucket_counts.assign(buckets, 0);
  for (std::size_t r = 0; r < buckets && g < 2 * k; ++r) {
    double upper = bucket_lower(k, epsilon, r + 1);
    auto allowed = static_cast<std::uint64_t>(std::floor(shape.bucket_bound(r)));
    std::uint64_t taken = 0;
    for (; g < 2 * k && static_cast<double>(g) < upper; ++g) {
      if (static_cast<double>(g) < bucket_lower(k, epsilon, r)) continue;
      if (taken < allowed) {
        gaps.push_back(g);
        ++taken;
      }
    }
  }
  return gaps;
}

namespace {

// `sorted` must be ascending; runs of consecutive values are summed as
// geometric series.
double rhs_sorted(std::span<const std::uint64_t> sorted, std::uint64_t cutoff,
                  double log_lambda) {
  const double one_minus_inv = -std::expm1(-log_lambda);
  double total = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[j - 1] + 1) ++j;
    double first = std::exp(-static_cast<double>(sorted[i]) * log_lambda);
    double count = static_cast<double>(j - i);
    total += first * -std::expm1(-count * log_lambda) / one_minus_inv;
    i = j;
  }
  total += std::exp(-static_cast<double>(cutoff) * log_lambda) / one_minus_inv;
  return total;
}

}  // namespace

double characteristic_rhs(std::span<const std::uint64_t> gaps,
                          std::uint64_t cutoff, double log_lambda) {
  std::vector<std::uint64_t> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  return rhs_sorted(sorted, cutoff, log_lambda);
}

CharacteristicModel solve_characteristic(std::span<const std::uint64_t> gaps,
                                         std::uint64_t k, double tol) {
  if (k < 1) throw Error(Errc::invalid_argument, "characteristic needs k >= 1");
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tolerance must be > 0");
  for (std::uint64_t g : gaps) {
    if (g < 1) throw Error(Errc::invalid_argument, "gaps must be >= 1");
  }
  CharacteristicModel model;
  model.gaps.assign(gaps.begin(), gaps.end());
  model.k = k;
  model.cutoff = 2 * k;

  std::vector<std::uint64_t> sorted = model.gaps;
  std::sort(sorted.begin(), sorted.end());
  auto excess = [&](double mu) {
    return rhs_sorted(sorted, model.cutoff, mu) - 1.0;
  };
  double hi = std::log(4.0);
  while (excess(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 700.0) {
      throw Error(Errc::numerical_failure, "no upper bracket for lambda-hat");
    }
  }
  double lo = hi / 2.0;
  while (excess(lo) <= 0.0) {
    lo /= 2.0;
    if (lo < 1e-300) {
      throw Error(Errc::numerical_failure, "no lower bracket for lambda-hat");
    }
  }
  for (int iter = 0; iter < 400; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  double mu = std::abs(excess(lo)) <= std::abs(excess(hi)) ? lo : hi;
  model.log_lambda = mu;
  model.lambda_hat = std::exp(mu);
  model.residual = excess(mu);
  if (std::abs(model.residual) > tol) {
    throw Error(Errc::numerical_failure,
                fmt::format("characteristic residual {} exceeds tolerance {}",
                            model.residual, tol));
  }
  if (k >= 2) {
    model.sigma = static_cast<double>(k) * mu / std::log(static_cast<double>(k));
  }
  return model;
}

}  // namespace wordentropy
