#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordentropy::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

enum class Suite { all, gaplang, renorm, ratio };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite) noexcept;

struct SuiteOptions {
  /// Caps the order k swept by the exact-count checks (1 and 7, default 6
  /// and 4) and the renormalization corpus (8 to 10, default 40).
  std::optional<unsigned> k_max;
};

/// Criterion ids belonging to a suite: gaplang 1-7, renorm 8-10, ratio 11-13.
std::vector<int> suite_criteria(Suite suite);

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

std::vector<CriterionResult> run_suite(Suite suite,
                                       const SuiteOptions& options = {});

/// Characteristic Sturmian corpus: every continued fraction of length 1 or 2
/// with entries in 1..4, plus seeded random ones of length 3..8.
std::vector<std::vector<unsigned>> sturmian_corpus();

}  // namespace wordentropy::verify
