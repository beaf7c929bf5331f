#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wordentropy/bigint.hpp"

namespace wordentropy {

/// An evaluable bound f: N -> R+ on complexity functions.
///
/// Three families: theta_k, f(n) = max{n + 1, theta^n} with
/// theta = exp(log k / k); envelope, f(n) = max{n + 1, exp(E0 n)}; and
/// tabulated values f(0..N). Every family satisfies f(n) >= n + 1, since
/// anything smaller only admits ultimately periodic words.
class BoundFunction {
 public:
  struct ThetaK {
    unsigned k;
  };
  struct Envelope {
    double e0;
  };
  struct Tabulated {
    std::vector<double> values;
  };

  static BoundFunction theta_k(unsigned k);
  static BoundFunction envelope(double e0);
  static BoundFunction tabulated(std::vector<double> values);

  double operator()(std::size_t n) const;

  /// Largest n at which f can be evaluated.
  std::size_t horizon() const noexcept;

  /// The exact limiting lower growth rate for the closed-form families.
  std::optional<double> closed_form_e0() const noexcept;

  std::string family() const;
  const std::variant<ThetaK, Envelope, Tabulated>& form() const noexcept {
    return form_;
  }

 private:
  explicit BoundFunction(std::variant<ThetaK, Envelope, Tabulated> form)
      : form_(std::move(form)) {}

  std::variant<ThetaK, Envelope, Tabulated> form_;
};

/// Relative slack used when comparing f(n + n') with f(n) f(n'); the two sides
/// are equal in exact arithmetic for the exponential families.
inline constexpr double kSubmultiplicativeSlack = 1e-12;

struct CStarReport {
  bool holds_i = true;  // f(n + 1) > f(n) >= n + 1
  std::optional<std::size_t> violation_i;
  bool holds_ii = true;  // f(n + n') <= f(n) f(n')
  std::optional<std::pair<std::size_t, std::size_t>> violation_ii;

  bool holds() const noexcept { return holds_i && holds_ii; }
};

/// Checks both conditions exhaustively for n + n' <= N. Violations are the
/// least n (resp. lexicographically least pair).
CStarReport check_cstar(const BoundFunction& f, std::size_t horizon);

/// Largest integer-valued submultiplicative minorant built left to right:
///   g(n) = min(floor f(n), min_{1 <= m < n} g(m) g(n - m)).
/// An integer profile p with p <= f up to N also satisfies p <= g, because p is
/// itself submultiplicative.
std::vector<BigInt> normalize_submultiplicative(const BoundFunction& f,
                                                std::size_t horizon);

/// g(n) + 1 - 2^-n: strictly increasing when g is non-decreasing, and an
/// integer p satisfies p <= g(n) + 1 - 2^-n iff p <= g(n).
BoundFunction repair_strictly_increasing(const std::vector<BigInt>& table);

struct E0Value {
  double value = 0.0;
  bool exact = false;
};

/// Closed forms return their exact E0. Tabulated f returns
/// min over n in [ceil(N/2), N] of log f(n) / n, flagged approximate.
E0Value e0(const BoundFunction& f, std::size_t horizon);

}  // namespace wordentropy
