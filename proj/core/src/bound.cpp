#include "wordentropy/bound.hpp"

#include <cmath>

#include <fmt/format.h>

#include "wordentropy/error.hpp"

namespace wordentropy {

BoundFunction BoundFunction::theta_k(unsigned k) {
  if (k < 1) throw Error(Errc::invalid_bound, "theta_k needs k >= 1");
  return BoundFunction(ThetaK{k});
}

BoundFunction BoundFunction::envelope(double e0) {
  if (!std::isfinite(e0) || e0 < 0.0) {
    throw Error(Errc::invalid_bound, "envelope needs a finite E0 >= 0");
  }
  return BoundFunction(Envelope{e0});
}

BoundFunction BoundFunction::tabulated(std::vector<double> values) {
  if (values.empty()) throw Error(Errc::invalid_bound, "empty bound table");
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (!(values[n] >= static_cast<double>(n + 1))) {
      throw Error(Errc::invalid_bound,
                  fmt::format("f({}) = {} is below n + 1", n, values[n]));
    }
  }
  return BoundFunction(Tabulated{std::move(values)});
}

double BoundFunction::operator()(std::size_t n) const {
  const auto linear = static_cast<double>(n + 1);
  const auto dn = static_cast<double>(n);
  if (const auto* t = std::get_if<ThetaK>(&form_)) {
    double log_theta = std::log(static_cast<double>(t->k)) / t->k;
    return std::max(linear, std::exp(log_theta * dn));
  }
  if (const auto* e = std::get_if<Envelope>(&form_)) {
    return std::max(linear, std::exp(e->e0 * dn));
  }
  const auto& table = std::get<Tabulated>(form_).values;
  if (n >= table.size()) {
    throw Error(Errc::out_of_range,
                fmt::format("bound tabulated up to {}, asked for {}",
                            table.size() - 1, n));
  }
  return table[n];
}

std::size_t BoundFunction::horizon() const noexcept {
  if (const auto* t = std::get_if<Tabulated>(&form_)) return t->values.size() - 1;
  return std::numeric_limits<std::size_t>::max();
}

std::optional<double> BoundFunction::closed_form_e0() const noexcept {
  if (const auto* t = std::get_if<ThetaK>(&form_)) {
    return std::log(static_cast<double>(t->k)) / t->k;
  }
  if (const auto* e = std::get_if<Envelope>(&form_)) return e->e0;
  return std::nullopt;
}

std::string BoundFunction::family() const {
  if (const auto* t = std::get_if<ThetaK>(&form_)) {
    return fmt::format("theta_k:{}", t->k);
  }
  if (const auto* e = std::get_if<Envelope>(&form_)) {
    return fmt::format("envelope:{}", e->e0);
  }
  return "tabulated";
}

CStarReport check_cstar(const BoundFunction& f, std::size_t horizon) {
  if (horizon < 2) throw Error(Errc::invalid_argument, "(C*) check needs N >= 2");
  if (horizon > f.horizon()) {
    throw Error(Errc::out_of_range, "(C*) horizon beyond the bound's table");
  }
  std::vector<double> values(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) values[n] = f(n);

  CStarReport report;
  for (std::size_t n = 0; n <= horizon; ++n) {
    bool grows = n == horizon || values[n + 1] > values[n];
    if (!grows || values[n] < static_cast<double>(n + 1)) {
      report.holds_i = false;
      report.violation_i = n;
      break;
    }
  }
  for (std::size_t n = 0; n <= horizon && report.holds_ii; ++n) {
    for (std::size_t m = 0; n + m <= horizon; ++m) {
      if (values[n + m] > values[n] * values[m] * (1.0 + kSubmultiplicativeSlack)) {
        report.holds_ii = false;
        report.violation_ii = std::pair{n, m};
        break;
      }
    }
  }
  return report;
}

std::vector<BigInt> normalize_submultiplicative(const BoundFunction& f,
                                                std::size_t horizon) {
  if (horizon > f.horizon()) {
    throw Error(Errc::out_of_range, "normalization horizon beyond the table");
  }
  std::vector<BigInt> g(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    double value = f(n);
    if (!(value >= static_cast<double>(n + 1))) {
      throw Error(Errc::invalid_bound,
                  fmt::format("f({}) = {} is below n + 1", n, value));
    }
    if (!std::isfinite(value)) {
      throw Error(Errc::invalid_bound, fmt::format("f({}) is not finite", n));
    }
    // doubles this large are integers already, so the conversion is exact
    g[n] = BigInt(std::floor(value));
    for (std::size_t m = 1; m < n; ++m) {
      BigInt product = g[m] * g[n - m];
      if (product < g[n]) g[n] = std::move(product);
    }
  }
  return g;
}

BoundFunction repair_strictly_increasing(const std::vector<BigInt>& table) {
  std::vector<double> values(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) {
    values[n] = to_double(table[n]) + 1.0 - std::ldexp(1.0, -static_cast<int>(n));
  }
  return BoundFunction::tabulated(std::move(values));
}

E0Value e0(const BoundFunction& f, std::size_t horizon) {
  if (horizon < 1) throw Error(Errc::invalid_argument, "E0 needs N >= 1");
  if (auto exact = f.closed_form_e0()) return {*exact, true};
  if (horizon > f.horizon()) {
    throw Error(Errc::out_of_range, "E0 horizon beyond the bound's table");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = (horizon + 1) / 2; n <= horizon; ++n) {
    if (n == 0) continue;
    best = std::min(best, std::log(f(n)) / static_cast<double>(n));
  }
  return {best, false};
}

}  // namespace wordentropy
