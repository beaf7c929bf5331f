#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "wordentropy/error.hpp"

namespace {

using namespace wordentropy;
using namespace wordentropy::cli;

constexpr int kExitInvalidArgs = 1;
constexpr int kExitFormat = 2;
constexpr int kExitRefusal = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitIo = 5;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::out_of_range:
    case Errc::invalid_bound:
    case Errc::invalid_profile:
      return kExitInvalidArgs;
    case Errc::format_error:
    case Errc::parse_mismatch:
      return kExitFormat;
    case Errc::not_pre_sturmian:
    case Errc::insufficient_data:
    case Errc::periodic_suspect:
    case Errc::degenerate_bound:
      return kExitRefusal;
    case Errc::numerical_failure:
      return kExitInvariant;
    case Errc::io_error:
      return kExitIo;
  }
  return kExitInvariant;
}

void add_word_input(CLI::App* cmd, WordInput& input) {
  cmd->add_option("--word-file", input.word_file, "File with one line of digits");
  cmd->add_option("--family", input.family,
                  "Generated word: periodic:0110, champernowne:3, sturmian:1,1,1 "
                  "or gapword:2");
  cmd->add_option("--length", input.length, "Prefix length for --family");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor complexity, gap languages, renormalization and entropy "
               "ratio bounds for infinite words"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Plain key=value file; command-line flags win");

  GlobalOptions global;
  std::string format = "csv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", global.out, "Write output to this file instead of stdout");
  app.add_option("--tol", global.tol, "Numerical tolerance override")
      ->check(CLI::PositiveNumber);

  ComplexityArgs complexity;
  auto* cmd_complexity = app.add_subcommand("complexity", "Factor complexity profile");
  add_word_input(cmd_complexity, complexity.input);
  cmd_complexity->add_option("--max-n", complexity.max_n, "Largest factor length")->required();
  cmd_complexity->add_option("--backend", complexity.backend, "window or sam")
      ->check(CLI::IsMember({"window", "sam"}))
      ->capture_default_str();

  GaplangArgs gaplang;
  auto* cmd_gaplang = app.add_subcommand("gaplang", "Gap-language counts, Perron root and gamma");
  cmd_gaplang->add_option("--k", gaplang.k, "Minimal number of zeros between 1s")->required();
  cmd_gaplang->add_option("--max-n", gaplang.max_n, "Table horizon (default 2(k+1))");
  cmd_gaplang->add_flag("--summary", gaplang.summary, "Emit the beta/gamma summary row");
  cmd_gaplang->add_option("--lemma-r-max", gaplang.lemma_r_max,
                          "Range of r for the growth-inequality check")
      ->capture_default_str();

  RenormArgs renorm;
  auto* cmd_renorm = app.add_subcommand("renorm", "Renormalization certificate of a pre-Sturmian word");
  add_word_input(cmd_renorm, renorm.input);
  cmd_renorm->add_option("--k", renorm.k, "Order")->required()->check(CLI::PositiveNumber);

  RatioArgs ratio;
  auto* cmd_ratio = app.add_subcommand("ratio", "Entropy-ratio experiment for f = theta_k");
  cmd_ratio->add_option("--k", ratio.k, "Order of theta_k")->required();
  cmd_ratio->add_option("--c", ratio.c, "Target ratio in (1/2, 1]")->capture_default_str();
  cmd_ratio->add_option("--horizon", ratio.horizon, "Horizon N")->capture_default_str();
  cmd_ratio->add_option("--prefix-length", ratio.prefix_length,
                        "Corpus prefix length (0: automatic)");
  cmd_ratio->add_flag("--census-only", ratio.census_only, "Skip the word corpus");
  cmd_ratio->add_flag("--heuristic", ratio.heuristic,
                      "Allow epsilon below the 2 log log k / log k window (labeled heuristic)");
  cmd_ratio->add_option("--seed", ratio.seed, "Seed for random corpus words")->capture_default_str();
  cmd_ratio->add_option("--random-words", ratio.random_words, "Random corpus words")
      ->capture_default_str();
  cmd_ratio->add_option("--corpus-csv", ratio.corpus_csv, "Also write the per-word CSV here");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the acceptance suites");
  cmd_verify->add_option("--suite", verify.suite, "all, gaplang, renorm or ratio")
      ->check(CLI::IsMember({"all", "gaplang", "renorm", "ratio"}))
      ->capture_default_str();
  cmd_verify->add_option("--k-max", verify.k_max, "Cap on the swept order k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidArgs;
  }
  global.format = format == "json" ? Format::json : Format::csv;

  std::ostringstream buffer;
  int code = 0;
  try {
    if (*cmd_complexity) code = run_complexity(global, complexity, buffer);
    if (*cmd_gaplang) code = run_gaplang(global, gaplang, buffer);
    if (*cmd_renorm) code = run_renorm(global, renorm, buffer);
    if (*cmd_ratio) code = run_ratio(global, ratio, buffer);
    if (*cmd_verify) code = run_verify(global, verify, buffer);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }

  if (global.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(global.out, std::ios::binary);
    if (!(file << buffer.str())) {
      std::cerr << "error (io-error): cannot write '" << global.out << "'\n";
      return kExitIo;
    }
  }
  return code;
}
