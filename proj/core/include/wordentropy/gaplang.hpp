#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "wordentropy/bigint.hpp"
#include "wordentropy/word.hpp"

namespace wordentropy {

/// L_k(n): binary words of length n in which any two 1s are separated by at
/// least k zeros, in lexicographic order.
std::vector<Word> enumerate_gap_words(unsigned k, std::size_t n);

/// q_k(0..N) = |L_k(0..N)| from the seed q_k(n) = n + 1 (n <= k + 1) and
/// q_k(n + k + 1) = q_k(n + k) + q_k(n), in exact integers.
std::vector<BigInt> qk_table(unsigned k, std::size_t horizon);

/// Largest real root of x^{k+1} - x^k - 1, by bisection on [1, 2] down to
/// adjacent doubles. Throws numerical_failure if the residual at the returned
/// point exceeds both `tol` and the rounding floor of a few ulps of x times
/// the slope there (the floor passes 1e-12 only for k in the thousands).
double beta(unsigned k, double tol = 1e-12);

/// gamma_k = max_{0 <= r <= k+1} log(k + 2 + r(r+3)/2) / (k + r + 1), which
/// equals max_{n >= k+1} log q_k(n) / n.
double gamma(unsigned k);

/// The r attaining gamma(k); ties go to the smallest r.
unsigned gamma_argmax(unsigned k);

struct LemmaBetaFailure {
  unsigned r = 0;
  int inequality = 0;  // 1: beta^{k+r} > r + 1, 2: k+1+r(r+3)/2 < beta^{2(k+r)}
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LemmaBetaReport {
  unsigned k = 0;
  unsigned r_max = 0;
  double beta = 0.0;
  std::vector<LemmaBetaFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Numeric check of the two growth inequalities satisfied by beta_k, for
/// 0 <= r <= r_max.
LemmaBetaReport verify_lemma_beta(unsigned k, unsigned r_max);

struct GapLanguage {
  unsigned k = 1;
  std::vector<BigInt> q_table;
  double beta = 0.0;
  double gamma = 0.0;

  static GapLanguage build(unsigned k, std::size_t horizon);
};

/// Columns k,n,q_k_n,log_q_over_n.
void write_gap_table_csv(std::ostream& out, const GapLanguage& language);

/// Columns k,beta_k,log_beta_k,gamma_k.
void write_gap_summary_csv(std::ostream& out,
                           std::span<const GapLanguage> languages);

}  // namespace wordentropy
