#include "wordentropy/gaplang.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "wordentropy/error.hpp"

namespace wordentropy {

namespace {

void check_k(unsigned k) {
  if (k < 1) throw Error(Errc::invalid_argument, "gap language needs k >= 1");
}

// x^k (x - 1) - 1, the same polynomial as x^{k+1} - x^k - 1 with less
// cancellation near the root.
double perron_residual(unsigned k, double x) {
  return std::pow(x, static_cast<double>(k)) * (x - 1.0) - 1.0;
}

void enumerate(unsigned k, std::size_t n, std::vector<Letter>& prefix,
               std::size_t zeros_since_one, std::vector<Word>& out) {
  if (prefix.size() == n) {
    out.emplace_back(Alphabet::binary(), prefix);
    return;
  }
  prefix.push_back(0);
  enumerate(k, n, prefix, zeros_since_one + 1, out);
  prefix.back() = 1;
  if (zeros_since_one >= k) enumerate(k, n, prefix, 0, out);
  prefix.pop_back();
}

}  // namespace

std::vector<Word> enumerate_gap_words(unsigned k, std::size_t n) {
  check_k(k);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  prefix.reserve(n);
  // no 1 seen yet, so the first 1 is always allowed
  enumerate(k, n, prefix, k, out);
  return out;
}

std::vector<BigInt> qk_table(unsigned k, std::size_t horizon) {
  check_k(k);
  std::vector<BigInt> q(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (n <= k + 1) {
      q[n] = n + 1;
    } else {
      q[n] = q[n - 1] + q[n - k - 1];
    }
  }
  return q;
}

double beta(unsigned k, double tol) {
  check_k(k);
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tolerance must be > 0");
  double lo = 1.0;  // residual -1
  double hi = 2.0;  // residual 2^k - 1 > 0
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (perron_residual(k, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double root = std::abs(perron_residual(k, lo)) <= std::abs(perron_residual(k, hi))
                    ? lo
                    : hi;
  double x = root;
  double residual = std::pow(x, k + 1.0) - std::pow(x, static_cast<double>(k)) - 1.0;
  // For large k the polynomial is so steep at the root that a one-ulp step in
  // x moves it by more than tol; the floor is what double precision allows.
  const double slope = (k + 1.0) * std::pow(x, static_cast<double>(k)) -
                       k * std::pow(x, k - 1.0);
  const double floor = 4.0 * slope * std::numeric_limits<double>::epsilon() * x;
  if (std::abs(residual) > std::max(tol, floor)) {
    throw Error(Errc::numerical_failure,
                fmt::format("beta_{} residual {} exceeds tolerance {}", k,
                            residual, tol));
  }
  return root;
}

double gamma(unsigned k) {
  check_k(k);
  unsigned r = gamma_argmax(k);
  double count = k + 2.0 + r * (r + 3.0) / 2.0;
  return std::log(count) / (k + r + 1.0);
}

unsigned gamma_argmax(unsigned k) {
  check_k(k);
  unsigned best_r = 0;
  double best = -1.0;
  for (unsigned r = 0; r <= k + 1; ++r) {
    // r(r+3) is always even
    double count = k + 2.0 + r * (r + 3.0) / 2.0;
    double value = std::log(count) / (k + r + 1.0);
    if (value > best) {
      best = value;
      best_r = r;
    }
  }
  return best_r;
}

LemmaBetaReport verify_lemma_beta(unsigned k, unsigned r_max) {
  LemmaBetaReport report;
  report.k = k;
  report.r_max = r_max;
  report.beta = beta(k, 1e-12);
  for (unsigned r = 0; r <= r_max; ++r) {
    double first_lhs = std::pow(report.beta, static_cast<double>(k + r));
    double first_rhs = r + 1.0;
    if (!(first_lhs > first_rhs)) {
      report.failures.push_back({r, 1, first_lhs, first_rhs});
    }
    double second_lhs = k + 1.0 + r * (r + 3.0) / 2.0;
    double second_rhs = std::pow(report.beta, 2.0 * (k + r));
    if (!(second_lhs < second_rhs)) {
      report.failures.push_back({r, 2, second_lhs, second_rhs});
    }
  }
  return report;
}

GapLanguage GapLanguage::build(unsigned k, std::size_t horizon) {
  return GapLanguage{k, qk_table(k, horizon), wordentropy::beta(k), wordentropy::gamma(k)};
}

void write_gap_table_csv(std::ostream& out, const GapLanguage& language) {
  out << "k,n,q_k_n,log_q_over_n\n";
  for (std::size_t n = 0; n < language.q_table.size(); ++n) {
    out << language.k << ',' << n << ',' << language.q_table[n] << ',';
    if (n > 0) {
      out << fmt::format("{:.12g}",
                         log_big(language.q_table[n]) / static_cast<double>(n));
    }
    out << '\n';
  }
}

void write_gap_summary_csv(std::ostream& out,
                           std::span<const GapLanguage> languages) {
  out << "k,beta_k,log_beta_k,gamma_k\n";
  for (const GapLanguage& language : languages) {
    out << fmt::format("{},{:.12g},{:.12g},{:.12g}\n", language.k, language.beta,
                       std::log(language.beta), language.gamma);
  }
}

}  // namespace wordentropy
