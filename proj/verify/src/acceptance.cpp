#include "wordentropy/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "wordentropy/bound.hpp"
#include "wordentropy/characteristic.hpp"
#include "wordentropy/complexity.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/prefix_source.hpp"
#include "wordentropy/renorm.hpp"
#include "wordentropy/verify/oracles.hpp"
#include "wordentropy/witness.hpp"

namespace wordentropy::verify {

namespace {

// Outcome of a single check inside a criterion. The first failure wins the
// detail line; passes accumulate into a count.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok && !failure_) failure_ = describe();
  }
  void fail(std::string message) {
    ++checks_;
    if (!failure_) failure_ = std::move(message);
  }
  bool passed() const { return !failure_; }
  std::string detail(const std::string& summary) const {
    return failure_ ? *failure_ : fmt::format("{} ({} checks)", summary, checks_);
  }

 private:
  std::size_t checks_ = 0;
  std::optional<std::string> failure_;
};

std::string big(const BigInt& v) { return v.str(); }

CriterionResult gap_counts_match_brute_force(const SuiteOptions& options) {
  const unsigned k_max = options.k_max.value_or(6);
  Tally tally;
  for (unsigned k = 1; k <= k_max; ++k) {
    std::vector<BigInt> table = qk_table(k, 24);
    for (unsigned n = 0; n <= 24; ++n) {
      std::uint64_t brute = brute_force_gap_count(k, n);
      tally.check(table[n] == brute, [&] {
        return fmt::format("k={} n={}: recurrence {} vs brute force {}", k, n,
                           big(table[n]), brute);
      });
    }
  }
  return {1, "exact gap-language counts", tally.passed(),
          tally.detail(fmt::format("k<={}, n<=24", k_max))};
}

CriterionResult fibonacci_specialization(const SuiteOptions&) {
  Tally tally;
  std::vector<BigInt> q = qk_table(1, 60);
  std::vector<BigInt> fib = fibonacci_numbers(62);  // fib[i] = F_{i+1}
  for (std::size_t n = 0; n <= 60; ++n) {
    tally.check(q[n] == fib[n + 1], [&] {
      return fmt::format("n={}: q_1 = {} but F_(n+2) = {}", n, big(q[n]),
                         big(fib[n + 1]));
    });
  }
  return {2, "Fibonacci specialization", tally.passed(),
          tally.detail(fmt::format("n<=60, q_1(60) = {}", big(q[60])))};
}

CriterionResult closed_form_seeds(const SuiteOptions&) {
  Tally tally;
  for (unsigned k = 1; k <= 50; ++k) {
    std::vector<BigInt> q = qk_table(k, 2 * k + 2);
    for (unsigned r = 0; r <= k + 1; ++r) {
      BigInt expected = BigInt(k + 2) + BigInt(r) * (r + 3) / 2;
      tally.check(q[k + r + 1] == expected, [&] {
        return fmt::format("k={} r={}: q = {}, expected {}", k, r,
                           big(q[k + r + 1]), big(expected));
      });
    }
  }
  return {3, "closed-form seeds", tally.passed(), tally.detail("k<=50, r<=k+1")};
}

CriterionResult perron_roots(const SuiteOptions&) {
  Tally tally;
  double worst = 0.0;
  for (unsigned k = 1; k <= 50; ++k) {
    double x = beta(k);
    double residual = std::abs(std::pow(x, k + 1) - std::pow(x, k) - 1.0);
    worst = std::max(worst, residual);
    tally.check(residual <= 1e-12, [&] {
      return fmt::format("k={}: residual {:.3e}", k, residual);
    });
  }
  const double golden = std::numbers::phi;
  tally.check(std::abs(beta(1) - golden) <= 1e-12, [&] {
    return fmt::format("beta_1 = {:.15f}, golden ratio {:.15f}", beta(1), golden);
  });
  return {4, "Perron roots", tally.passed(),
          tally.detail(fmt::format("worst residual {:.2e}", worst))};
}

CriterionResult gamma_table(const SuiteOptions&) {
  Tally tally;
  const double half_log3 = 0.5 * std::log(3.0);
  tally.check(std::abs(gamma(1) - half_log3) <= 1e-12, [&] {
    return fmt::format("gamma_1 = {:.15f}, expected {:.15f}", gamma(1), half_log3);
  });
  for (unsigned k = 1; k <= 50; ++k) {
    tally.check(std::abs(gamma(k) - gamma_by_scan(k)) <= 1e-12, [&] {
      return fmt::format("k={}: gamma {} vs scan {}", k, gamma(k), gamma_by_scan(k));
    });
    if (k >= 2) {
      tally.check(gamma(k) < gamma(k - 1), [&] {
        return fmt::format("gamma not decreasing at k={}", k);
      });
      double log_beta = std::log(beta(k));
      tally.check(log_beta <= gamma(k), [&] {
        return fmt::format("k={}: log beta {} > gamma {}", k, log_beta, gamma(k));
      });
      tally.check(gamma(k - 1) < 2.0 * log_beta, [&] {
        return fmt::format("k={}: gamma_(k-1) {} >= 2 log beta_k {}", k,
                           gamma(k - 1), 2.0 * log_beta);
      });
    }
  }
  for (unsigned k = 1; k <= 20; ++k) {
    const std::size_t horizon = 10 * (k + 1);
    std::vector<BigInt> q = qk_table(k, horizon);
    for (std::size_t n = k + 1; n <= horizon; ++n) {
      double rate = log_big(q[n]) / static_cast<double>(n);
      tally.check(rate <= gamma(k) + 1e-15, [&] {
        return fmt::format("k={} n={}: log q / n = {} exceeds gamma {}", k, n,
                           rate, gamma(k));
      });
    }
  }
  return {5, "gamma table", tally.passed(), tally.detail("k<=50")};
}

CriterionResult lemma_beta(const SuiteOptions&) {
  Tally tally;
  std::size_t failures = 0;
  for (unsigned k = 1; k <= 50; ++k) {
    LemmaBetaReport report = verify_lemma_beta(k, 100);
    failures += report.failures.size();
    tally.check(report.ok(), [&] {
      const LemmaBetaFailure& f = report.failures.front();
      return fmt::format("k={} r={} inequality {}: {} vs {}", k, f.r,
                         f.inequality, f.lhs, f.rhs);
    });
  }
  return {6, "growth inequalities for beta_k", tally.passed(),
          tally.detail(fmt::format("k<=50, r<=100, {} violations", failures))};
}

CriterionResult gap_word_construction(const SuiteOptions& options) {
  const unsigned k_max = options.k_max ? std::min(*options.k_max, 4U) : 4U;
  Tally tally;
  for (unsigned k = 1; k <= k_max; ++k) {
    PrefixSource source(GapWordFamily{k});
    const std::size_t length = source.witness_length(12);
    ComplexityProfile profile = complexity_profile(source.generate(length), 12);
    std::vector<BigInt> expected = gap_counts_by_states(k, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      tally.check(BigInt(profile[n]) == expected[n], [&] {
        return fmt::format("k={} n={}: measured {} vs q_k {}", k, n, profile[n],
                           big(expected[n]));
      });
    }
  }
  return {7, "gap-word construction", tally.passed(),
          tally.detail(fmt::format("k<={}, n<=12", k_max))};
}

// Renormalization of the Sturmian corpus, shared by criteria 8 to 10.
struct RenormRun {
  std::vector<unsigned> cf;
  unsigned k = 0;
  Word word;
  std::optional<Renormalization> certificate;
  std::optional<Errc> refusal;
  std::string message;
};

std::size_t corpus_prefix_length(const std::vector<unsigned>& cf, unsigned k) {
  PrefixSource source(SturmianFamily{cf});
  return std::max(min_renorm_length(k), source.witness_length(k + 1));
}

const std::vector<RenormRun>& renorm_runs(unsigned k_max) {
  static std::map<unsigned, std::vector<RenormRun>> cache;
  auto it = cache.find(k_max);
  if (it != cache.end()) return it->second;
  std::vector<RenormRun> runs;
  for (const std::vector<unsigned>& cf : sturmian_corpus()) {
    for (unsigned k = 1; k <= k_max; ++k) {
      RenormRun run{cf, k, sturmian_word(cf, corpus_prefix_length(cf, k)), {}, {}, {}};
      try {
        run.certificate = renormalize(run.word, k);
      } catch (const Error& e) {
        run.refusal = e.code();
        run.message = e.what();
      }
      runs.push_back(std::move(run));
    }
  }
  return cache.emplace(k_max, std::move(runs)).first->second;
}

std::string describe(const RenormRun& run) {
  return fmt::format("cf=[{}] k={}", fmt::join(run.cf, ","), run.k);
}

CriterionResult renorm_soundness(const SuiteOptions& options) {
  const unsigned k_max = options.k_max.value_or(40);
  Tally tally;
  for (const RenormRun& run : renorm_runs(k_max)) {
    if (!run.certificate) {
      tally.fail(fmt::format("{}: refused ({})", describe(run), run.message));
      continue;
    }
    const Renormalization& r = *run.certificate;
    tally.check(r.a[0] != r.b[0], [&] { return describe(run) + ": first letters agree"; });
    tally.check(r.a.size() >= r.b.size(), [&] { return describe(run) + ": |a| < |b|"; });
    tally.check(r.measure() > run.k, [&] {
      return fmt::format("{}: measure {} <= k", describe(run), r.measure());
    });
    tally.check(decode(r) == drop_prefix(run.word, r.skip), [&] {
      return describe(run) + ": decode does not reproduce the word";
    });
  }

  // Golden case against the exhaustive block search.
  const std::vector<unsigned> golden_cf{1};
  Word golden = sturmian_word(golden_cf, corpus_prefix_length(golden_cf, 4));
  Renormalization r = renormalize(golden, 4);
  tally.check(r.a.to_string() == "10" && r.b.to_string() == "0" && r.s == 1, [&] {
    return fmt::format("golden k=4: a={} b={} s={}", r.a.to_string(),
                       r.b.to_string(), r.s);
  });
  std::vector<BlockTriple> triples =
      exhaustive_block_search(golden.prefix(400).to_string(), 4, 4, 4);
  bool found = std::any_of(triples.begin(), triples.end(), [&](const BlockTriple& t) {
    return t.a == r.a.to_string() && t.b == r.b.to_string() && t.s == r.s;
  });
  tally.check(found && triples.size() == 1, [&] {
    std::vector<std::string> names;
    for (const BlockTriple& t : triples) {
      names.push_back(fmt::format("({},{},{})", t.a, t.b, t.s));
    }
    return fmt::format("exhaustive search found {}", fmt::join(names, " "));
  });
  return {8, "renormalization soundness", tally.passed(),
          tally.detail(fmt::format("{} words x k<={}", sturmian_corpus().size(), k_max))};
}

CriterionResult no_double_both(const SuiteOptions& options) {
  const unsigned k_max = options.k_max.value_or(40);
  Tally tally;
  std::size_t parses = 0;
  for (const RenormRun& run : renorm_runs(k_max)) {
    if (run.refusal == Errc::not_pre_sturmian) {
      tally.fail(fmt::format("{}: {}", describe(run), run.message));
      continue;
    }
    if (!run.certificate) continue;
    for (const RenormStep& step : run.certificate->history) {
      ++parses;
      tally.check(step.doubles != DoubleClass::both, [&] {
        return fmt::format("{}: both AA and BB at a={} b={} s={}", describe(run),
                           step.a.to_string(), step.b.to_string(), step.s);
      });
      const std::size_t measure = (step.s + 1) * step.a.size() + step.b.size();
      tally.check(measure <= run.k, [&] {
        return describe(run) + ": intermediate parse already above k";
      });
    }
  }
  return {9, "no parse has both AA and BB", tally.passed(),
          tally.detail(fmt::format("{} intermediate parses", parses))};
}

CriterionResult entropy_consistency(const SuiteOptions& options) {
  const unsigned k_max = options.k_max.value_or(40);
  const std::size_t length = 100000;
  Tally tally;
  std::map<std::vector<unsigned>, double> measured;
  for (const std::vector<unsigned>& cf : sturmian_corpus()) {
    Word w = sturmian_word(cf, length);
    ComplexityProfile profile = complexity_profile(
        w, witness_horizon(length), CountingBackend::suffix_automaton);
    measured[cf] = entropy_upper(profile).best_upper;
  }
  double worst_margin = 1.0;
  for (const RenormRun& run : renorm_runs(k_max)) {
    if (!run.certificate) continue;
    const double bound = entropy_upper_from_renorm(*run.certificate);
    const double value = measured.at(run.cf);
    worst_margin = std::min(worst_margin, bound + 0.05 - value);
    tally.check(value <= bound + 0.05, [&] {
      return fmt::format("{}: measured {} > log 2/|a| + 0.05 = {}", describe(run),
                         value, bound + 0.05);
    });
  }
  return {10, "entropy bound consistency", tally.passed(),
          tally.detail(fmt::format("least margin {:.4f}", worst_margin))};
}

WitnessRegime expected_regime(double e0) {
  if (e0 >= std::log(2.0)) return WitnessRegime::full_shift;
  if (e0 >= gamma_by_scan(1)) return WitnessRegime::fibonacci;
  return WitnessRegime::gap;
}

CriterionResult witness_suite(const SuiteOptions&) {
  Tally tally;
  constexpr std::size_t kHorizon = 30;
  constexpr std::size_t kMeasureBudget = 2'000'000;
  for (double e0 : {1.2, 0.60, 0.30, 0.15, 0.05}) {
    const BoundFunction f = BoundFunction::envelope(e0);
    const Witness w = lower_bound_witness(f);
    const WitnessRegime regime = expected_regime(e0);
    tally.check(w.regime == regime, [&] {
      return fmt::format("E0={}: regime {} expected {}", e0, to_string(w.regime),
                         to_string(regime));
    });

    std::vector<BigInt> reference;
    if (regime == WitnessRegime::full_shift) {
      const auto m = static_cast<unsigned>(std::floor(std::exp(e0)));
      tally.check(w.m == m, [&] { return fmt::format("E0={}: m={} expected {}", e0, w.m, m); });
      BigInt power = 1;
      for (std::size_t n = 0; n <= kHorizon; ++n, power *= m) reference.push_back(power);
    } else {
      unsigned k0 = 1;
      if (regime == WitnessRegime::gap) {
        k0 = 2;
        while (gamma_by_scan(k0) > e0) ++k0;
      }
      tally.check(w.k0 == k0, [&] { return fmt::format("E0={}: k0={} expected {}", e0, w.k0, k0); });
      reference = gap_counts_by_states(k0, kHorizon);
    }

    std::vector<BigInt> exact = w.exact_profile(kHorizon);
    for (std::size_t n = 1; n <= kHorizon; ++n) {
      tally.check(exact[n] == reference[n], [&] {
        return fmt::format("E0={} n={}: exact profile {} vs oracle {}", e0, n,
                           big(exact[n]), big(reference[n]));
      });
      tally.check(log_big(exact[n]) <= std::log(f(n)) + 1e-12, [&] {
        return fmt::format("E0={} n={}: p = {} exceeds f = {}", e0, n,
                           big(exact[n]), f(n));
      });
    }

    // The witness prefix itself realizes the exact profile wherever every
    // factor is guaranteed to have appeared within budget.
    std::size_t measurable = 0;
    while (measurable < kHorizon && w.source.witness_length(measurable + 1) <= kMeasureBudget) {
      ++measurable;
    }
    if (measurable > 0) {
      Word prefix = w.source.generate(w.source.witness_length(measurable));
      ComplexityProfile profile =
          complexity_profile(prefix, measurable, CountingBackend::suffix_automaton);
      for (std::size_t n = 1; n <= measurable; ++n) {
        tally.check(BigInt(profile[n]) == exact[n], [&] {
          return fmt::format("E0={} n={}: prefix has {} factors, expected {}", e0,
                             n, profile[n], big(exact[n]));
        });
      }
    }

    tally.check(w.claimed_entropy > e0 / 2 + 1e-9, [&] {
      return fmt::format("E0={}: claimed {} not above E0/2", e0, w.claimed_entropy);
    });
  }
  const Witness fib = lower_bound_witness(BoundFunction::envelope(0.60));
  const double log_phi = std::log(std::numbers::phi);
  tally.check(std::abs(fib.claimed_entropy - log_phi) <= 1e-12 &&
                  fib.claimed_entropy > 0.5 * std::log(2.0),
              [&] { return fmt::format("E0=0.60 claimed {}", fib.claimed_entropy); });
  return {11, "lower-bound witnesses", tally.passed(),
          tally.detail(fmt::format("E0=0.60 claims {:.6f}", fib.claimed_entropy))};
}

CriterionResult characteristic_suite(const SuiteOptions&) {
  Tally tally;
  std::mt19937_64 rng(0x5eed);
  double worst = 0.0;
  for (int instance = 0; instance < 20; ++instance) {
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, 12)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    std::uniform_int_distribution<std::uint64_t> gap_dist(1, 2 * k);
    std::set<std::uint64_t> distinct;
    while (distinct.size() < std::min<std::size_t>(count, 2 * k)) distinct.insert(gap_dist(rng));
    std::vector<std::uint64_t> gaps(distinct.begin(), distinct.end());

    const CharacteristicModel model = solve_characteristic(gaps, k);
    const double oracle = dp_growth_ratio(gaps, k, 2000);
    worst = std::max(worst, std::abs(model.lambda_hat - oracle));
    tally.check(std::abs(model.lambda_hat - oracle) <= 1e-6, [&] {
      return fmt::format("k={} gaps=[{}]: lambda {} vs dp {}", k,
                         fmt::join(gaps, ","), model.lambda_hat, oracle);
    });

    std::uint64_t extra = 0;
    for (std::uint64_t g = 1; extra == 0; ++g) {
      if (!distinct.count(g)) extra = g;
    }
    std::vector<std::uint64_t> more = gaps;
    more.push_back(extra);
    const double raised = solve_characteristic(more, k).lambda_hat;
    tally.check(raised > model.lambda_hat, [&] {
      return fmt::format("k={}: adding gap {} did not raise lambda", k, extra);
    });
    const double lowered = solve_characteristic(gaps, k + 1).lambda_hat;
    tally.check(lowered < model.lambda_hat, [&] {
      return fmt::format("k={}: raising the cutoff did not lower lambda", k);
    });
  }
  const double golden = solve_characteristic({}, 1).lambda_hat;
  tally.check(std::abs(golden - std::numbers::phi) <= 1e-9, [&] {
    return fmt::format("empty gaps, k=1: {}", golden);
  });
  return {12, "characteristic equation", tally.passed(),
          tally.detail(fmt::format("worst DP gap {:.2e}", worst))};
}

CriterionResult cstar_suite(const SuiteOptions&) {
  Tally tally;
  for (unsigned k : {5U, 20U, 100U}) {
    CStarReport report = check_cstar(BoundFunction::theta_k(k), 300);
    tally.check(report.holds(), [&] { return fmt::format("theta_{} fails (C*)", k); });
  }

  std::vector<Word> corpus;
  for (const std::vector<unsigned>& cf : sturmian_corpus()) {
    corpus.push_back(sturmian_word(cf, 4000));
  }
  for (unsigned k = 1; k <= 8; ++k) corpus.push_back(gap_word(k, 20000));
  corpus.push_back(champernowne_word(2, 20000));
  corpus.push_back(periodic_word(Word::from_string("0010111"), 2000));

  std::size_t admitted = 0;
  for (unsigned k : {5U, 20U, 100U}) {
    const BoundFunction f = BoundFunction::theta_k(k);
    const std::size_t horizon = 200;
    std::vector<BigInt> g = normalize_submultiplicative(f, horizon);
    for (std::size_t n = 2; n <= horizon; ++n) {
      for (std::size_t m = 1; m < n; ++m) {
        tally.check(g[n] <= g[m] * g[n - m], [&] {
          return fmt::format("theta_{}: g({}) > g({}) g({})", k, n, m, n - m);
        });
      }
    }
    for (const Word& w : corpus) {
      const std::size_t n_max = std::min(horizon, witness_horizon(w.size()));
      ComplexityProfile profile = complexity_profile(w, n_max);
      if (!is_admissible(profile, f).admissible) continue;
      ++admitted;
      for (std::size_t n = 0; n <= n_max; ++n) {
        tally.check(BigInt(profile[n]) <= g[n], [&] {
          return fmt::format("theta_{}: admitted profile exceeds g at n={}", k, n);
        });
      }
    }
  }
  tally.check(admitted > 0, [] { return std::string("no corpus profile was admitted"); });
  return {13, "(C*) machinery", tally.passed(),
          tally.detail(fmt::format("{} admitted profiles", admitted))};
}

struct Entry {
  const char* title;
  CriterionResult (*run)(const SuiteOptions&);
};

const std::map<int, Entry>& registry() {
  static const std::map<int, Entry> table = {
      {1, {"exact gap-language counts", gap_counts_match_brute_force}},
      {2, {"Fibonacci specialization", fibonacci_specialization}},
      {3, {"closed-form seeds", closed_form_seeds}},
      {4, {"Perron roots", perron_roots}},
      {5, {"gamma table", gamma_table}},
      {6, {"growth inequalities for beta_k", lemma_beta}},
      {7, {"gap-word construction", gap_word_construction}},
      {8, {"renormalization soundness", renorm_soundness}},
      {9, {"no parse has both AA and BB", no_double_both}},
      {10, {"entropy bound consistency", entropy_consistency}},
      {11, {"lower-bound witnesses", witness_suite}},
      {12, {"characteristic equation", characteristic_suite}},
      {13, {"(C*) machinery", cstar_suite}},
  };
  return table;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "gaplang") return Suite::gaplang;
  if (name == "renorm") return Suite::renorm;
  if (name == "ratio") return Suite::ratio;
  return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::all:
      return "all";
    case Suite::gaplang:
      return "gaplang";
    case Suite::renorm:
      return "renorm";
    case Suite::ratio:
      return "ratio";
  }
  return "unknown";
}

std::vector<int> suite_criteria(Suite suite) {
  switch (suite) {
    case Suite::gaplang:
      return {1, 2, 3, 4, 5, 6, 7};
    case Suite::renorm:
      return {8, 9, 10};
    case Suite::ratio:
      return {11, 12, 13};
    case Suite::all:
      break;
  }
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  auto it = registry().find(id);
  if (it == registry().end()) {
    return {id, "unknown criterion", false, fmt::format("no criterion {}", id), 0.0};
  }
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = it->second.run(options);
  } catch (const std::exception& e) {
    result = {id, it->second.title, false, fmt::format("exception: {}", e.what()), 0.0};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_suite(Suite suite, const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  for (int id : suite_criteria(suite)) results.push_back(run_criterion(id, options));
  return results;
}

std::vector<std::vector<unsigned>> sturmian_corpus() {
  std::vector<std::vector<unsigned>> corpus;
  for (unsigned a = 1; a <= 4; ++a) corpus.push_back({a});
  for (unsigned a = 1; a <= 4; ++a) {
    for (unsigned b = 1; b <= 4; ++b) corpus.push_back({a, b});
  }
  std::mt19937 rng(1729);
  std::uniform_int_distribution<unsigned> length(3, 8);
  std::uniform_int_distribution<unsigned> entry(1, 4);
  for (int i = 0; i < 16; ++i) {
    std::vector<unsigned> cf(length(rng));
    for (unsigned& a : cf) a = entry(rng);
    corpus.push_back(std::move(cf));
  }
  return corpus;
}

}  // namespace wordentropy::verify
