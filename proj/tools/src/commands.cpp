#include "commands.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "wordentropy/complexity.hpp"
#include "wordentropy/error.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/prefix_source.hpp"
#include "wordentropy/ratio.hpp"
#include "wordentropy/renorm.hpp"
#include "wordentropy/serialize.hpp"
#include "wordentropy/verify/acceptance.hpp"

namespace wordentropy::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefusal = 3;
constexpr int kExitInvariant = 4;

Word load_word(const WordInput& input, std::size_t default_length) {
  if (!input.word_file.empty() && !input.family.empty()) {
    throw Error(Errc::invalid_argument, "give either --word-file or --family, not both");
  }
  if (!input.word_file.empty()) return read_word_file(input.word_file);
  if (input.family.empty()) {
    throw Error(Errc::invalid_argument, "one of --word-file or --family is required");
  }
  return PrefixSource::parse(input.family).generate(input.length.value_or(default_length));
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_complexity(const GlobalOptions& global, const ComplexityArgs& args,
                   std::ostream& out) {
  if (!args.input.family.empty() && !args.input.length) {
    throw Error(Errc::invalid_argument, "--length is required with --family");
  }
  CountingBackend backend;
  if (args.backend == "window") {
    backend = CountingBackend::window_scan;
  } else if (args.backend == "sam") {
    backend = CountingBackend::suffix_automaton;
  } else {
    throw Error(Errc::invalid_argument, fmt::format("unknown backend '{}'", args.backend));
  }
  const Word w = load_word(args.input, 0);
  const ComplexityProfile profile = complexity_profile(w, args.max_n, backend);

  if (global.format == Format::json) {
    json j = profile;
    if (profile.horizon() >= 1) j["entropy"] = entropy_upper(profile);
    print_json(out, j);
    return kExitOk;
  }
  // The last column is the Fekete estimate using lengths up to n.
  out << "n,p_n,log_p_n_over_n,best_upper\n";
  out << fmt::format("0,{},,\n", profile[0]);
  double best = INFINITY;
  for (std::size_t n = 1; n <= profile.horizon(); ++n) {
    const double rate = std::log(static_cast<double>(profile[n])) / static_cast<double>(n);
    best = std::min(best, rate);
    out << fmt::format("{},{},{:.12g},{:.12g}\n", n, profile[n], rate, best);
  }
  return kExitOk;
}

int run_gaplang(const GlobalOptions& global, const GaplangArgs& args, std::ostream& out) {
  if (args.k < 1) throw Error(Errc::invalid_argument, "--k must be >= 1");
  const std::size_t horizon = args.max_n.value_or(2 * (std::size_t{args.k} + 1));
  const GapLanguage language = GapLanguage::build(args.k, horizon);

  // Internal invariants: closed-form seeds inside the table, the Perron root
  // residual, log beta <= gamma, and both growth inequalities.
  std::vector<std::string> broken;
  for (unsigned r = 0; r <= args.k + 1 && args.k + r + 1 <= horizon; ++r) {
    BigInt expected = BigInt(args.k + 2) + BigInt(r) * (r + 3) / 2;
    if (language.q_table[args.k + r + 1] != expected) {
      broken.push_back(fmt::format("seed r={}", r));
    }
  }
  const double residual = std::abs(std::pow(language.beta, args.k + 1) -
                                   std::pow(language.beta, args.k) - 1.0);
  if (residual > global.tol.value_or(1e-12)) broken.push_back("beta residual");
  if (std::log(language.beta) > language.gamma) broken.push_back("log beta > gamma");
  const LemmaBetaReport lemma = verify_lemma_beta(args.k, args.lemma_r_max);
  if (!lemma.ok()) broken.push_back("growth inequalities");

  if (global.format == Format::json) {
    json j = language;
    j["log_beta"] = std::log(language.beta);
    j["beta_residual"] = residual;
    j["lemma"] = lemma;
    j["invariants_ok"] = broken.empty();
    j["broken"] = broken;
    print_json(out, j);
  } else if (args.summary) {
    write_gap_summary_csv(out, std::span<const GapLanguage>(&language, 1));
  } else {
    write_gap_table_csv(out, language);
  }
  return broken.empty() ? kExitOk : kExitInvariant;
}

int run_renorm(const GlobalOptions& global, const RenormArgs& args, std::ostream& out) {
  const Word w = load_word(args.input, std::max<std::size_t>(min_renorm_length(args.k), 20000));
  try {
    const Renormalization r = renormalize(w, args.k);
    if (global.format == Format::json) {
      print_json(out, json(r));
    } else {
      out << "k,a,b,s,skip,measure,token_count,leftover\n";
      out << fmt::format("{},{},{},{},{},{},{},{}\n", r.k, r.a.to_string(),
                         r.b.to_string(), r.s, r.skip, r.measure(), r.tokens.size(),
                         r.leftover.to_string());
    }
    return kExitOk;
  } catch (const RenormError& e) {
    if (e.code() == Errc::invalid_argument) throw;
    if (global.format == Format::json) {
      json j{{"refusal", to_string(e.code())}, {"message", e.what()}};
      if (e.partial()) j["partial"] = *e.partial();
      print_json(out, j);
    } else {
      out << "refusal,message\n";
      std::string message = e.what();
      std::string quoted;
      for (char c : message) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      out << fmt::format("{},\"{}\"\n", to_string(e.code()), quoted);
    }
    return kExitRefusal;
  }
}

int run_ratio(const GlobalOptions& global, const RatioArgs& args, std::ostream& out) {
  RatioOptions options;
  options.k = args.k;
  options.c = args.c;
  options.horizon = args.horizon;
  options.prefix_length = args.prefix_length;
  options.census_only = args.census_only;
  options.heuristic_override = args.heuristic;
  options.seed = args.seed;
  options.random_words = args.random_words;
  if (global.tol) options.tolerance = *global.tol;
  const RatioReport report = ratio_experiment(options);

  if (!args.corpus_csv.empty()) {
    std::ofstream csv(args.corpus_csv);
    if (!csv) {
      throw Error(Errc::io_error, fmt::format("cannot write '{}'", args.corpus_csv));
    }
    write_corpus_csv(csv, report);
  }
  if (global.format == Format::json) {
    print_json(out, json(report));
  } else {
    write_corpus_csv(out, report);
  }

  // A certificate whose measured entropy exceeds its own finite bound means
  // the renormalization or the counting is wrong.
  for (const CorpusEntry& entry : report.corpus) {
    if (entry.certificate && !entry.consistent) return kExitInvariant;
  }
  return kExitOk;
}

int run_verify(const GlobalOptions& global, const VerifyArgs& args, std::ostream& out) {
  const auto suite = verify::parse_suite(args.suite);
  if (!suite) {
    throw Error(Errc::invalid_argument, fmt::format("unknown suite '{}'", args.suite));
  }
  const std::vector<verify::CriterionResult> results =
      verify::run_suite(*suite, verify::SuiteOptions{args.k_max});
  bool all_passed = true;
  json checks = json::array();
  for (const verify::CriterionResult& r : results) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (global.format == Format::json) {
    print_json(out, json{{"suite", args.suite}, {"passed", all_passed}, {"checks", checks}});
  } else {
    // Timings are left out so that repeated runs print identical text.
    for (const verify::CriterionResult& r : results) {
      out << fmt::format("{} {:>2} {}: {}\n", r.passed ? "PASS" : "FAIL", r.id, r.title, r.detail);
    }
    out << fmt::format("{}\n", json{{"suite", args.suite}, {"passed", all_passed}, {"checks", checks}}.dump());
  }
  return all_passed ? kExitOk : kExitInvariant;
}

}  // namespace wordentropy::cli
