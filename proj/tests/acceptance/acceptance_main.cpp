#include <cstdio>

#include <fmt/format.h>

#include "wordentropy/verify/acceptance.hpp"

int main() {
  using namespace wordentropy::verify;
  bool all_passed = true;
  for (const CriterionResult& r : run_suite(Suite::all)) {
    all_passed = all_passed && r.passed;
    fmt::print("{} {:>2} {:<32} {:7.2f}s  {}\n", r.passed ? "PASS" : "FAIL", r.id,
               r.title, r.seconds, r.detail);
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
