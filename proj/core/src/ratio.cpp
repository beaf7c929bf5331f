#include "wordentropy/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "wordentropy/complexity.hpp"
#include "wordentropy/error.hpp"
#include "wordentropy/prefix_source.hpp"

namespace wordentropy {

namespace {

constexpr std::size_t kMaxCorpusPrefix = 4'000'000;

struct Candidate {
  std::string label;
  Word word;
};

Word random_gap_word(unsigned k, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> gap(k, 2 * k - 1);
  std::vector<Letter> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    letters.push_back(1);
    for (unsigned z = gap(rng); z > 0 && letters.size() < length; --z) {
      letters.push_back(0);
    }
  }
  letters.resize(length);
  return Word(Alphabet::binary(), std::move(letters));
}

std::vector<Candidate> build_corpus(const RatioOptions& options,
                                    std::size_t prefix_length) {
  std::vector<Candidate> corpus;
  static const std::vector<std::vector<unsigned>> kContinuedFractions = {
      {1}, {2}, {3}, {1, 2}, {4, 1}, {1, 1, 2}, {2, 1, 3}, {2, 2, 3, 1}};
  for (const auto& cf : kContinuedFractions) {
    PrefixSource source(SturmianFamily{cf});
    corpus.push_back({source.spec(), source.generate(prefix_length)});
  }
  for (unsigned gap_k : {options.k, options.k + 1}) {
    PrefixSource source(GapWordFamily{gap_k});
    std::size_t length = std::clamp(source.witness_length(options.k + 1),
                                    prefix_length, kMaxCorpusPrefix);
    corpus.push_back({source.spec(), source.generate(length)});
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_words; ++i) {
    corpus.push_back({fmt::format("random-gaps:{}:{}", options.seed, i),
                      random_gap_word(options.k, prefix_length, rng)});
  }
  return corpus;
}

CorpusEntry evaluate(const Candidate& candidate, const BoundFunction& f,
                     const RatioOptions& options, double epsilon,
                     double sigma_bound) {
  CorpusEntry entry;
  entry.label = candidate.label;
  entry.prefix_length = candidate.word.size();
  entry.profile_horizon =
      std::min(options.horizon, witness_horizon(candidate.word.size()));
  ComplexityProfile profile =
      complexity_profile(candidate.word, entry.profile_horizon);
  Admissibility admissibility = is_admissible(profile, f);
  entry.admissible = admissibility.admissible;
  entry.first_violation = admissibility.first_violation;
  entry.measured_best_upper = entropy_upper(profile).best_upper;
  if (!entry.admissible) return entry;

  try {
    entry.certificate = renormalize(candidate.word, options.k);
  } catch (const RenormError& e) {
    entry.refusal = std::string(to_string(e.code()));
    return entry;
  }
  const Renormalization& cert = *entry.certificate;
  entry.renorm_upper = entropy_upper_from_renorm(cert);
  entry.finite_upper = entropy_upper_from_renorm(cert, entry.profile_horizon);
  entry.consistent = entry.measured_best_upper <= entry.finite_upper + 1e-12;
  entry.census =
      gap_census(cert, options.k, epsilon, options.heuristic_override);
  entry.model =
      solve_characteristic(entry.census->gaps, options.k, options.tolerance);
  entry.sigma_below_bound = entry.model->sigma && *entry.model->sigma < sigma_bound;
  return entry;
}

}  // namespace

RatioReport ratio_experiment(const RatioOptions& options) {
  if (options.k < 2) throw Error(Errc::invalid_argument, "ratio experiment needs k >= 2");
  if (!(options.c > 0.5) || options.c > 1.0) {
    throw Error(Errc::invalid_argument,
                fmt::format("c must lie in (1/2, 1], got {}", options.c));
  }
  if (options.horizon < 2) {
    throw Error(Errc::invalid_argument, "ratio experiment needs horizon >= 2");
  }

  const double epsilon = 0.5 * (options.c - 0.5);
  const double window_lower = epsilon_window_lower(options.k);
  if (epsilon < window_lower && !options.heuristic_override) {
    throw Error(Errc::invalid_argument,
                fmt::format("epsilon = {} is below 2 log log k / log k = {} at "
                            "k = {}; the window opens for k >= {:.3g} (or pass "
                            "the heuristic override)",
                            epsilon, window_lower, options.k,
                            minimal_k_for_epsilon(epsilon)));
  }

  const BoundFunction f = BoundFunction::theta_k(options.k);
  RatioReport report{.witness = lower_bound_witness(f)};
  report.k = options.k;
  report.c = options.c;
  report.epsilon = epsilon;
  report.epsilon_window_lower = window_lower;
  report.heuristic = epsilon < window_lower;
  report.f_family = f.family();
  report.e0 = *f.closed_form_e0();
  report.cstar = check_cstar(f, options.horizon);
  report.sigma_bound = 0.5 + 2.0 * report.epsilon;
  report.target_entropy = options.c * report.e0;

  std::vector<std::uint64_t> synthetic = extremal_gaps(options.k, report.epsilon);
  report.synthetic_census = gap_census_from_gaps(
      synthetic, options.k, 1, report.epsilon, options.heuristic_override);
  report.synthetic_model =
      solve_characteristic(synthetic, options.k, options.tolerance);
  report.lambda_hat = report.synthetic_model.lambda_hat;
  report.sigma = report.synthetic_model.sigma.value_or(0.0);

  if (!options.census_only) {
    std::size_t prefix_length =
        options.prefix_length != 0
            ? options.prefix_length
            : std::max<std::size_t>(min_renorm_length(options.k), 20000);
    if (prefix_length > kMaxCorpusPrefix) {
      throw Error(Errc::invalid_argument,
                  fmt::format("a corpus at k = {} needs prefixes of {} letters; "
                              "use census-only mode",
                              options.k, prefix_length));
    }
    for (const Candidate& candidate : build_corpus(options, prefix_length)) {
      report.corpus.push_back(
          evaluate(candidate, f, options, report.epsilon, report.sigma_bound));
      const CorpusEntry& entry = report.corpus.back();
      if (entry.admissible) {
        report.max_measured_entropy =
            std::max(report.max_measured_entropy, entry.measured_best_upper);
      }
    }
  }

  report.rho_interval = {report.witness.claimed_entropy / report.e0, 1.0};
  return report;
}

}  // namespace wordentropy
