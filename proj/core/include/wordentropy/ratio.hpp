#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordentropy/bound.hpp"
#include "wordentropy/characteristic.hpp"
#include "wordentropy/renorm.hpp"
#include "wordentropy/witness.hpp"

namespace wordentropy {

struct RatioOptions {
  unsigned k = 0;
  double c = 0.75;
  std::size_t horizon = 64;       // (C*) check and profile horizon
  std::size_t prefix_length = 0;  // 0: max(8k(k+1), 20000)
  bool census_only = false;
  bool heuristic_override = false;  // relax the epsilon window's lower end
  std::uint64_t seed = 20170901;
  std::size_t random_words = 3;
  double tolerance = 1e-9;  // lambda-hat residual
};

/// Outcome for one word of the candidate corpus.
struct CorpusEntry {
  std::string label;
  std::size_t prefix_length = 0;
  std::size_t profile_horizon = 0;
  bool admissible = false;
  std::optional<std::size_t> first_violation;
  double measured_best_upper = 0.0;
  std::optional<Renormalization> certificate;
  std::string refusal;  // error category when renormalize refused
  double renorm_upper = 0.0;  // log 2 / |a|
  double finite_upper = 0.0;  // (|a| + |b| + ceil(N/|a|)) log 2 / N at the horizon
  bool consistent = false;    // measured_best_upper <= finite_upper
  std::optional<GapCensus> census;
  std::optional<CharacteristicModel> model;
  bool sigma_below_bound = false;
};

struct RatioReport {
  std::string f_family{};
  unsigned k = 0;
  double c = 0.0;
  double epsilon = 0.0;
  double epsilon_window_lower = 0.0;
  bool heuristic = false;
  double e0 = 0.0;
  CStarReport cstar{};
  Witness witness;
  GapCensus synthetic_census{};
  CharacteristicModel synthetic_model{};
  std::vector<CorpusEntry> corpus{};
  double sigma_bound = 0.0;       // 1/2 + 2 eps
  double max_measured_entropy = 0.0;
  double target_entropy = 0.0;    // c log k / k
  double lambda_hat = 0.0;
  double sigma = 0.0;
  std::array<double, 2> rho_interval{0.0, 1.0};
};

/// Builds f = theta_k, checks (C*), finds the lower-bound witness, evaluates
/// the worst-case gap census, and (unless census_only) renormalizes a corpus
/// of Sturmian, gap and random gap-constrained words against f.
///
/// rho_interval is [witness entropy / E0, 1]: certified on both ends. The
/// sigma values are evidence for the upper side at finite k, not a proof.
RatioReport ratio_experiment(const RatioOptions& options);

}  // namespace wordentropy
