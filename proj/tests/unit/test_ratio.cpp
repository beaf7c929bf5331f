#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "wordentropy/characteristic.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/ratio.hpp"
#include "wordentropy/verify/oracles.hpp"

namespace we = wordentropy;
using we::Errc;
using we::Token;

namespace {

// a = "0", b = "1", s = 1: a B token followed by m A tokens contributes a
// gap of m + 2 letters.
we::Renormalization stream_with_gaps(std::span<const std::uint64_t> gaps) {
  we::Renormalization r;
  r.a = we::Word::from_string("0");
  r.b = we::Word::from_string("1");
  r.s = 1;
  for (std::uint64_t g : gaps) {
    r.tokens.push_back(Token::B);
    r.tokens.insert(r.tokens.end(), g - 2, Token::A);
  }
  r.tokens.push_back(Token::B);
  return r;
}

}  // namespace

TEST(EpsilonWindow, LowerEndAndMinimalOrder) {
  EXPECT_NEAR(we::epsilon_window_lower(64), 2 * std::log(std::log(64.0)) / std::log(64.0), 1e-15);
  EXPECT_NEAR(we::epsilon_window_lower(64), 0.685, 1e-3);
  const double k_min = we::minimal_k_for_epsilon(0.125);
  EXPECT_LE(we::epsilon_window_lower(k_min), 0.125);
  EXPECT_GT(we::epsilon_window_lower(0.999 * k_min), 0.125);
  EXPECT_ERRC(we::minimal_k_for_epsilon(0.0), Errc::invalid_argument);
}

TEST(GapCensus, HandCountedBuckets) {
  // k = 20, eps = 1/4: gaps in [15, 40), bucket r covers [20 + 5(r - 1), 20 + 5r)
  const std::vector<std::uint64_t> gaps{19, 21, 22, 26, 10, 21};
  const we::GapCensus census =
      we::gap_census(stream_with_gaps(gaps), 20, 0.25, /*heuristic_override=*/true);
  EXPECT_TRUE(census.heuristic);
  EXPECT_EQ(census.gaps, (std::vector<std::uint64_t>{19, 21, 22, 26}));
  EXPECT_EQ(census.multiplicity.at(21), 2u);
  EXPECT_EQ(census.bucket_counts, (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  EXPECT_EQ(census.t, (std::vector<std::uint64_t>{30, 35, 40, 45, 50}));
  EXPECT_EQ(census.h, 5u);
  EXPECT_EQ(census.bucket_of(21), 1u);
  EXPECT_ERRC(census.bucket_of(14), Errc::out_of_range);
  EXPECT_TRUE(census.bucket_bounds_hold());
}

TEST(GapCensus, TwoAdjacentExponentsFillBucketsOneAndTwo) {
  // a = "00", b = "1", s in {11, 12}: gaps 23 and 25 with k = 20, eps = 1/4
  we::Renormalization r;
  r.a = we::Word::from_string("00");
  r.b = we::Word::from_string("1");
  r.s = 11;
  for (int i = 0; i < 10; ++i) {
    r.tokens.push_back(Token::B);
    if (i % 3 == 0) r.tokens.push_back(Token::A);
  }
  const we::GapCensus census = we::gap_census(r, 20, 0.25, true);
  EXPECT_EQ(census.gaps, (std::vector<std::uint64_t>{23, 25}));
  EXPECT_EQ(census.bucket_counts[1], 1u);
  EXPECT_EQ(census.bucket_counts[2], 1u);
  EXPECT_EQ(census.h, 2u);
}

TEST(GapCensus, UniformShortGapsGiveEmptyCensus) {
  const std::vector<std::uint64_t> gaps(12, 5);
  const we::GapCensus census = we::gap_census(stream_with_gaps(gaps), 20, 0.25, true);
  EXPECT_TRUE(census.gaps.empty());
  for (std::size_t count : census.bucket_counts) EXPECT_EQ(count, 0u);
}

TEST(GapCensus, Errors) {
  const std::vector<std::uint64_t> gaps{19};
  const we::Renormalization r = stream_with_gaps(gaps);
  EXPECT_ERRC(we::gap_census(r, 20, 0.25), Errc::invalid_argument);
  EXPECT_ERRC(we::gap_census(r, 20, 0.3, true), Errc::invalid_argument);
  EXPECT_ERRC(we::gap_census(r, 20, 0.0, true), Errc::invalid_argument);
  EXPECT_ERRC(we::gap_census(we::Renormalization{}, 20, 0.25, true), Errc::invalid_argument);
  // inside the window no override is needed
  EXPECT_FALSE(we::gap_census(r, 1'000'000'000'000ULL, 0.25).heuristic);
}

TEST(ExtremalGaps, RespectBucketBounds) {
  for (std::uint64_t k : {100ULL, 10'000ULL, 1'000'000ULL}) {
    const std::vector<std::uint64_t> gaps = we::extremal_gaps(k, 0.125);
    ASSERT_FALSE(gaps.empty());
    const we::GapCensus census = we::gap_census_from_gaps(gaps, k, 1, 0.125, true);
    EXPECT_EQ(census.gaps, gaps);
    EXPECT_TRUE(census.bucket_bounds_hold());
    EXPECT_LT(gaps.back(), 2 * k);
  }
}

TEST(SolveCharacteristic, GoldenRatioWithoutGaps) {
  const we::CharacteristicModel model = we::solve_characteristic({}, 1, 1e-13);
  EXPECT_NEAR(model.lambda_hat, (1 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_FALSE(model.sigma.has_value());
  EXPECT_EQ(model.cutoff, 2u);
}

TEST(SolveCharacteristic, RepeatedGapTwoApproachesRootTwo) {
  // gaps form a multiset; with the cutoff term negligible 2 / lambda^2 = 1
  const std::vector<std::uint64_t> gaps{2, 2};
  const we::CharacteristicModel model = we::solve_characteristic(gaps, 200, 1e-12);
  EXPECT_NEAR(model.lambda_hat, std::sqrt(2.0), 1e-9);
  EXPECT_LT(std::abs(model.residual), 1e-9);
  EXPECT_NEAR(we::characteristic_rhs(gaps, 400, model.log_lambda), 1.0, 1e-9);
}

TEST(SolveCharacteristic, SingleGapTwoTendsToOne) {
  // 1 / lambda^2 alone already equals 1 at lambda = 1, so only the cutoff
  // tail keeps the root above 1
  const std::vector<std::uint64_t> gaps{2};
  double previous = 2.0;
  for (std::uint64_t k : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const we::CharacteristicModel model = we::solve_characteristic(gaps, k, 1e-13);
    EXPECT_GT(model.lambda_hat, 1.0);
    EXPECT_LT(model.lambda_hat, previous);
    EXPECT_LT(std::abs(model.residual), 1e-9);
    previous = model.lambda_hat;
  }
  EXPECT_LT(previous, 1.001);
}

TEST(SolveCharacteristic, AgreesWithGrowthRecursion) {
  std::mt19937_64 rng(2024);
  for (int instance = 0; instance < 24; ++instance) {
    const std::uint64_t k = 2 + rng() % 19;
    std::vector<std::uint64_t> gaps;
    for (std::uint64_t g = 1; g < 2 * k; ++g) {
      if (rng() % 3 == 0) gaps.push_back(g);
    }
    const we::CharacteristicModel model = we::solve_characteristic(gaps, k, 1e-12);
    EXPECT_NEAR(we::verify::dp_growth_ratio(gaps, k, 2000), model.lambda_hat, 1e-6)
        << "instance " << instance << " k=" << k;
    ASSERT_TRUE(model.sigma);
    EXPECT_NEAR(*model.sigma, k * model.log_lambda / std::log(static_cast<double>(k)), 1e-12);
  }
}

TEST(SolveCharacteristic, Monotonicity) {
  std::vector<std::uint64_t> gaps{9, 12};
  const double base = we::solve_characteristic(gaps, 10).lambda_hat;
  gaps.push_back(15);
  EXPECT_GT(we::solve_characteristic(gaps, 10).lambda_hat, base);
  EXPECT_LT(we::solve_characteristic(gaps, 12).lambda_hat,
            we::solve_characteristic(gaps, 10).lambda_hat);
  EXPECT_ERRC(we::solve_characteristic(gaps, 0), Errc::invalid_argument);
  EXPECT_ERRC(we::solve_characteristic(gaps, 10, 0.0), Errc::invalid_argument);
  const std::vector<std::uint64_t> zero{0};
  EXPECT_ERRC(we::solve_characteristic(zero, 10), Errc::invalid_argument);
}

TEST(RatioExperiment, SmallOrderIsRejectedWithMinimalOrder) {
  we::RatioOptions options;
  options.k = 64;
  options.c = 0.75;
  try {
    we::ratio_experiment(options);
    FAIL() << "expected rejection";
  } catch (const we::Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
    EXPECT_NE(std::string(e.what()).find("1.8e+29"), std::string::npos) << e.what();
  }
}

TEST(RatioExperiment, OptionValidation) {
  we::RatioOptions options;
  options.heuristic_override = true;
  options.k = 1;
  EXPECT_ERRC(we::ratio_experiment(options), Errc::invalid_argument);
  options.k = 16;
  options.c = 0.5;
  EXPECT_ERRC(we::ratio_experiment(options), Errc::invalid_argument);
  options.c = 0.75;
  options.horizon = 1;
  EXPECT_ERRC(we::ratio_experiment(options), Errc::invalid_argument);
  options.horizon = 64;
  options.prefix_length = 5'000'000;
  EXPECT_ERRC(we::ratio_experiment(options), Errc::invalid_argument);
}

TEST(RatioExperiment, LargeOrderCensusOnly) {
  we::RatioOptions options;
  options.k = 1'000'000;
  options.census_only = true;
  options.heuristic_override = true;
  const we::RatioReport report = we::ratio_experiment(options);
  EXPECT_TRUE(report.heuristic);
  EXPECT_TRUE(report.corpus.empty());
  EXPECT_TRUE(report.cstar.holds());
  EXPECT_GT(report.lambda_hat, 1.0);
  EXPECT_LT(report.sigma, report.sigma_bound);
  EXPECT_NEAR(report.sigma_bound, 0.75, 1e-15);
  EXPECT_TRUE(report.synthetic_census.bucket_bounds_hold());
  EXPECT_EQ(report.witness.regime, we::WitnessRegime::gap);
  EXPECT_GT(report.rho_interval[0], 0.5);
  EXPECT_DOUBLE_EQ(report.rho_interval[1], 1.0);
}

TEST(RatioExperiment, CorpusIsConsistent) {
  we::RatioOptions options;
  options.k = 24;
  options.heuristic_override = true;
  options.random_words = 2;
  const we::RatioReport report = we::ratio_experiment(options);
  ASSERT_EQ(report.corpus.size(), 8u + 2u + 2u);
  std::size_t certified = 0;
  for (const we::CorpusEntry& entry : report.corpus) {
    if (!entry.certificate) continue;
    ++certified;
    EXPECT_TRUE(entry.consistent) << entry.label;
    EXPECT_GT(entry.certificate->measure(), 24u) << entry.label;
    EXPECT_LE(entry.measured_best_upper, entry.finite_upper + 1e-12) << entry.label;
  }
  EXPECT_GE(certified, 8u);
  EXPECT_LE(report.max_measured_entropy, std::log(2.0));
}

TEST(RatioExperiment, SeedMakesRunsReproducible) {
  we::RatioOptions options;
  options.k = 12;
  options.heuristic_override = true;
  options.prefix_length = 4000;
  const we::RatioReport first = we::ratio_experiment(options);
  const we::RatioReport second = we::ratio_experiment(options);
  ASSERT_EQ(first.corpus.size(), second.corpus.size());
  for (std::size_t i = 0; i < first.corpus.size(); ++i) {
    EXPECT_EQ(first.corpus[i].label, second.corpus[i].label);
    EXPECT_EQ(first.corpus[i].measured_best_upper, second.corpus[i].measured_best_upper);
  }
}
