#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace wordentropy::cli {

enum class Format { csv, json };

struct GlobalOptions {
  Format format = Format::csv;
  std::string out;  // empty: standard output
  std::optional<double> tol;
};

/// Where the word comes from: a digit file or a family spec plus length.
struct WordInput {
  std::string word_file;
  std::string family;
  std::optional<std::size_t> length;
};

struct ComplexityArgs {
  WordInput input;
  std::size_t max_n = 0;
  std::string backend = "window";
};

struct GaplangArgs {
  unsigned k = 1;
  std::optional<std::size_t> max_n;
  bool summary = false;
  unsigned lemma_r_max = 100;
};

struct RenormArgs {
  WordInput input;
  unsigned k = 1;
};

struct RatioArgs {
  unsigned k = 0;
  double c = 0.75;
  std::size_t horizon = 64;
  std::size_t prefix_length = 0;
  bool census_only = false;
  bool heuristic = false;
  std::uint64_t seed = 20170901;
  std::size_t random_words = 3;
  std::string corpus_csv;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<unsigned> k_max;
};

// Each command writes its result to `out` and returns the process exit code.
// Library errors propagate as exceptions; main maps them to exit codes.
int run_complexity(const GlobalOptions& global, const ComplexityArgs& args, std::ostream& out);
int run_gaplang(const GlobalOptions& global, const GaplangArgs& args, std::ostream& out);
int run_renorm(const GlobalOptions& global, const RenormArgs& args, std::ostream& out);
int run_ratio(const GlobalOptions& global, const RatioArgs& args, std::ostream& out);
int run_verify(const GlobalOptions& global, const VerifyArgs& args, std::ostream& out);

}  // namespace wordentropy::cli
