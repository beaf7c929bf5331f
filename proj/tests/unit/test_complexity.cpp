#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "wordentropy/bound.hpp"
#include "wordentropy/complexity.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/prefix_source.hpp"
#include "wordentropy/verify/oracles.hpp"

namespace we = wordentropy;
using we::ComplexityProfile;
using we::CountingBackend;
using we::Errc;
using we::Word;

namespace {

std::vector<std::uint64_t> values(const ComplexityProfile& p) {
  return {p.values().begin(), p.values().end()};
}

Word random_word(std::mt19937_64& rng, unsigned q, std::size_t n) {
  std::vector<we::Letter> letters(n);
  std::uniform_int_distribution<unsigned> letter(0, q - 1);
  for (auto& l : letters) l = static_cast<we::Letter>(letter(rng));
  return Word(we::Alphabet(q), std::move(letters));
}

ComplexityProfile profile_of(std::vector<std::uint64_t> v) {
  return ComplexityProfile(1000, std::move(v));
}

}  // namespace

TEST(ComplexityProfile, PeriodTwoExample) {
  EXPECT_EQ(values(we::complexity_profile(Word::from_string("010101"), 3)),
            (std::vector<std::uint64_t>{1, 2, 2, 2}));
}

TEST(ComplexityProfile, GoldenPrefixIsSturmian) {
  const std::vector<unsigned> golden{1};
  ComplexityProfile p = we::complexity_profile(we::sturmian_word(golden, 200), 10);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(p[n], n + 1);
}

TEST(ComplexityProfile, GapWordTwo) {
  we::PrefixSource source(we::GapWordFamily{2});
  ComplexityProfile p = we::complexity_profile(source.generate(source.witness_length(4)), 4);
  EXPECT_EQ(p[4], 6u);
}

TEST(ComplexityProfile, HorizonBeyondWordIsRejected) {
  EXPECT_ERRC(we::complexity_profile(Word::from_string("0101"), 5), Errc::out_of_range);
  EXPECT_EQ(we::complexity_profile(Word::from_string("0101"), 4)[4], 1u);
  EXPECT_EQ(we::complexity_profile(Word::from_string(""), 0)[0], 1u);
}

TEST(ComplexityProfile, BackendsAgreeWithSetOracleOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned q = 2 + trial % 3;
    const std::size_t n = 1 + rng() % 64;
    Word w = random_word(rng, q, n);
    ComplexityProfile scan = we::complexity_profile(w, n, CountingBackend::window_scan);
    ComplexityProfile sam = we::complexity_profile(w, n, CountingBackend::suffix_automaton);
    EXPECT_EQ(scan, sam);
    for (std::size_t m = 0; m <= n; ++m) {
      EXPECT_EQ(scan[m], m == 0 ? 1 : we::verify::set_factor_count(w, m)) << w.to_string();
    }
  }
}

TEST(ComplexityProfile, BackendsAgreeOnLongStructuredWords) {
  for (const char* spec : {"sturmian:1,3,2", "gapword:3", "champernowne:2", "periodic:0010111"}) {
    Word w = we::PrefixSource::parse(spec).generate(50000);
    EXPECT_EQ(we::complexity_profile(w, 200, CountingBackend::window_scan),
              we::complexity_profile(w, 200, CountingBackend::suffix_automaton))
        << spec;
  }
}

TEST(ComplexityProfile, StructuralInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned q = 2 + trial % 2;
    Word w = random_word(rng, q, 300);
    const std::size_t horizon = 40;
    ComplexityProfile p = we::complexity_profile(w, horizon);
    EXPECT_EQ(p[0], 1u);
    for (std::size_t n = 0; n <= horizon; ++n) {
      EXPECT_LE(p[n], w.size() - n + 1);
      if (n < horizon) EXPECT_LE(p[n + 1], q * p[n]);
      for (std::size_t m = 0; m + n <= horizon; ++m) EXPECT_LE(p[m + n], p[m] * p[n]);
    }
  }
}

TEST(ComplexityProfile, PeriodicWordsStabilizeAtThePeriod) {
  std::mt19937_64 rng(3);
  for (std::size_t period = 1; period <= 8; ++period) {
    // a primitive pattern: a single 1 among zeros has least period `period`
    std::vector<we::Letter> pattern(period, 0);
    pattern[rng() % period] = 1;
    Word w = we::periodic_word(Word(we::Alphabet::binary(), pattern), 4 * period + 7);
    ComplexityProfile p = we::complexity_profile(w, 3 * period);
    for (std::size_t n = period; n <= 3 * period; ++n) EXPECT_EQ(p[n], period) << period;
  }
}

TEST(ComplexityProfile, SturmianWitnessLengthSuffices) {
  // Every factor present in a much longer prefix already occurs within the
  // witness length.
  for (const std::vector<unsigned>& cf :
       std::vector<std::vector<unsigned>>{{1}, {2}, {4}, {1, 3}, {3, 1, 2}, {2, 2, 3, 1, 4}}) {
    we::PrefixSource source(we::SturmianFamily{cf});
    for (std::size_t n : {1U, 5U, 12U, 30U}) {
      ComplexityProfile p = we::complexity_profile(source.generate(source.witness_length(n)), n);
      EXPECT_EQ(p[n], n + 1) << "n=" << n;
    }
  }
}

TEST(ComplexityProfile, WitnessHorizonHeuristicHoldsForFamilies) {
  const std::size_t length = 4000;
  for (const char* spec : {"sturmian:1", "sturmian:2,3", "periodic:011"}) {
    we::PrefixSource source = we::PrefixSource::parse(spec);
    const std::size_t horizon = we::witness_horizon(length);
    ComplexityProfile short_p = we::complexity_profile(source.generate(length), horizon,
                                                       CountingBackend::suffix_automaton);
    ComplexityProfile long_p = we::complexity_profile(source.generate(16 * length), horizon,
                                                      CountingBackend::suffix_automaton);
    EXPECT_EQ(short_p, ComplexityProfile(length, values(long_p))) << spec;
  }
}

TEST(SpecialFactors, Examples) {
  const std::vector<unsigned> golden{1};
  auto golden_special = we::special_factors(we::sturmian_word(golden, 1000), 3);
  ASSERT_EQ(golden_special.size(), 1u);
  EXPECT_EQ(golden_special[0].to_string(), "010");
  EXPECT_TRUE(we::special_factors(Word::from_string("000000"), 2).empty());
  auto champ = we::special_factors(we::champernowne_word(2, 62), 1);
  ASSERT_EQ(champ.size(), 2u);
  EXPECT_EQ(champ[0].to_string(), "0");
  EXPECT_EQ(champ[1].to_string(), "1");
  EXPECT_ERRC(we::special_factors(Word::from_string("01"), 2), Errc::out_of_range);
}

TEST(SpecialFactors, CountMatchesFirstDifferenceOfComplexity) {
  for (const char* spec : {"sturmian:1", "sturmian:3,1,2", "gapword:1", "gapword:2"}) {
    we::PrefixSource source = we::PrefixSource::parse(spec);
    for (std::size_t n = 1; n <= 8; ++n) {
      Word w = source.generate(source.witness_length(n + 2));
      ComplexityProfile p = we::complexity_profile(w, n + 1);
      EXPECT_EQ(we::special_factors(w, n).size(), p[n + 1] - p[n]) << spec << " n=" << n;
    }
  }
}

TEST(EntropyUpper, Examples) {
  std::vector<std::uint64_t> linear(21);
  for (std::size_t n = 0; n <= 20; ++n) linear[n] = n + 1;
  EXPECT_NEAR(we::entropy_upper(profile_of(linear)).best_upper, std::log(21.0) / 20, 1e-15);

  std::vector<std::uint64_t> full(11);
  for (std::size_t n = 0; n <= 10; ++n) full[n] = std::uint64_t{1} << n;
  EXPECT_NEAR(we::entropy_upper(profile_of(full)).best_upper, std::log(2.0), 1e-15);

  std::vector<std::uint64_t> fib;
  for (const we::BigInt& v : we::qk_table(1, 30)) fib.push_back(v.convert_to<std::uint64_t>());
  we::EntropyEstimate e = we::entropy_upper(profile_of(fib));
  EXPECT_NEAR(e.best_upper, std::log((1 + std::sqrt(5.0)) / 2), 0.02);
  EXPECT_EQ(e.best_n, 30u);
  EXPECT_EQ(e.per_n.size(), 30u);
}

TEST(EntropyUpper, Errors) {
  EXPECT_ERRC(we::entropy_upper(profile_of({1, 2, 0})), Errc::invalid_profile);
  EXPECT_ERRC(we::entropy_upper(profile_of({1})), Errc::invalid_profile);
  EXPECT_ERRC(ComplexityProfile(3, {}), Errc::invalid_profile);
}

TEST(IsAdmissible, Examples) {
  std::vector<std::uint64_t> linear(11);
  for (std::size_t n = 0; n <= 10; ++n) linear[n] = n + 1;
  std::vector<double> n_plus_one(11);
  for (std::size_t n = 0; n <= 10; ++n) n_plus_one[n] = n + 1.0;
  const we::BoundFunction f = we::BoundFunction::tabulated(n_plus_one);
  EXPECT_TRUE(we::is_admissible(profile_of(linear), f).admissible);

  std::vector<std::uint64_t> full(11);
  for (std::size_t n = 0; n <= 10; ++n) full[n] = std::uint64_t{1} << n;
  we::Admissibility verdict = we::is_admissible(profile_of(full), f);
  EXPECT_FALSE(verdict.admissible);
  EXPECT_EQ(verdict.first_violation, 2u);

  std::vector<std::uint64_t> q2;
  for (const we::BigInt& v : we::qk_table(2, 60)) q2.push_back(v.convert_to<std::uint64_t>());
  const we::BoundFunction envelope = we::BoundFunction::envelope(we::gamma(2));
  EXPECT_TRUE(we::is_admissible(profile_of(q2), envelope).admissible);
}

TEST(ProfileCsv, HeaderAndRows) {
  std::ostringstream out;
  we::write_profile_csv(out, we::complexity_profile(Word::from_string("0110"), 2));
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "n,p_n,log_p_n_over_n");
  EXPECT_NE(out.str().find("\n0,1,\n"), std::string::npos);
  EXPECT_NE(out.str().find("\n2,3,"), std::string::npos);
}
