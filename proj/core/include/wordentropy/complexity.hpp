#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "wordentropy/bound.hpp"
#include "wordentropy/word.hpp"

namespace wordentropy {

enum class CountingBackend {
  window_scan,       // per-length refinement of window classes
  suffix_automaton,  // one automaton, all lengths at once
};

/// Distinct-factor counts p(0..N) of a finite word.
///
/// A profile computed from a prefix undercounts the infinite word it came
/// from; callers asserting exact values should stay below the source's
/// witness length.
class ComplexityProfile {
 public:
  ComplexityProfile(std::size_t source_length, std::vector<std::uint64_t> values);

  std::size_t source_length() const noexcept { return source_length_; }
  std::size_t horizon() const noexcept { return values_.size() - 1; }
  std::uint64_t operator[](std::size_t n) const { return values_.at(n); }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  friend bool operator==(const ComplexityProfile&,
                         const ComplexityProfile&) = default;

 private:
  std::size_t source_length_;
  std::vector<std::uint64_t> values_;
};

ComplexityProfile complexity_profile(
    const Word& w, std::size_t horizon,
    CountingBackend backend = CountingBackend::window_scan);

/// Right-special factors of length n: factors v with v x and v y both
/// occurring for distinct letters x != y. Sorted lexicographically.
std::vector<Word> special_factors(const Word& w, std::size_t n);

struct EntropyEstimate {
  std::vector<double> per_n;  // per_n[n - 1] = log p(n) / n
  double best_upper = 0.0;    // min of per_n
  std::size_t best_n = 0;
};

/// Fekete upper estimates of the entropy: min over 1 <= n <= N of
/// log p(n) / n (natural log).
EntropyEstimate entropy_upper(const ComplexityProfile& profile);

struct Admissibility {
  bool admissible = true;
  std::optional<std::size_t> first_violation;
};

/// p(n) <= f(n) for every n up to the profile horizon.
Admissibility is_admissible(const ComplexityProfile& profile,
                            const BoundFunction& f);

/// CSV with header `n,p_n,log_p_n_over_n`; the n = 0 row leaves the last
/// column empty.
void write_profile_csv(std::ostream& out, const ComplexityProfile& profile);

}  // namespace wordentropy
