#include "wordentropy/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "wordentropy/error.hpp"
#include "wordentropy/gaplang.hpp"

namespace wordentropy {

std::string_view to_string(WitnessRegime regime) noexcept {
  switch (regime) {
    case WitnessRegime::full_shift:
      return "full_shift";
    case WitnessRegime::fibonacci:
      return "fibonacci";
    case WitnessRegime::gap:
      return "gap";
  }
  return "unknown";
}

std::vector<BigInt> Witness::exact_profile(std::size_t horizon) const {
  if (regime == WitnessRegime::full_shift) {
    std::vector<BigInt> out(horizon + 1);
    BigInt value = 1;
    for (std::size_t n = 0; n <= horizon; ++n) {
      out[n] = value;
      value *= m;
    }
    return out;
  }
  return qk_table(k0, horizon);
}

unsigned select_k0(double e0) {
  if (!(e0 > 0.0) || !(e0 < gamma(1))) {
    throw Error(Errc::invalid_argument,
                fmt::format("k0 selection needs 0 < E0 < gamma_1, got {}", e0));
  }
  // gamma is strictly decreasing and tends to 0: bracket, then bisect for
  // the least k with gamma(k) <= e0.
  unsigned lo = 1;
  unsigned hi = 2;
  while (gamma(hi) > e0) {
    if (hi > std::numeric_limits<unsigned>::max() / 2) {
      throw Error(Errc::out_of_range,
                  fmt::format("E0 = {} needs an order beyond range", e0));
    }
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    (gamma(mid) > e0 ? lo : hi) = mid;
  }
  return hi;
}

Witness lower_bound_witness(const BoundFunction& f, std::size_t envelope_check) {
  const std::size_t table_end = std::min(f.horizon(), std::size_t{1} << 20);
  const double e0_value = e0(f, std::max<std::size_t>(table_end, 1)).value;
  if (!(e0_value > 0.0)) {
    throw Error(Errc::degenerate_bound,
                fmt::format("E0 = {} admits no positive-entropy witness",
                            e0_value));
  }

  const std::size_t check_end = std::min(envelope_check, f.horizon());
  for (std::size_t n = 0; n <= check_end; ++n) {
    double envelope = std::max(static_cast<double>(n + 1),
                               std::exp(e0_value * static_cast<double>(n)));
    if (f(n) < envelope * (1.0 - 1e-12)) {
      throw Error(Errc::invalid_bound,
                  fmt::format("f({}) = {} is below the lower envelope {}", n,
                              f(n), envelope));
    }
  }

  const double log2 = std::log(2.0);
  const double half_log3 = 0.5 * std::log(3.0);
  Witness witness{WitnessRegime::full_shift, 0, 0,
                  PrefixSource(GapWordFamily{1}), 0.0, e0_value};
  if (e0_value >= log2) {
    // the relative nudge keeps E0 = log m from flooring to m - 1
    auto m = static_cast<unsigned>(std::floor(std::exp(e0_value) * (1.0 + 1e-12)));
    witness.regime = WitnessRegime::full_shift;
    witness.m = m;
    witness.source = PrefixSource(ChampernowneFamily{m});
    witness.claimed_entropy = std::log(static_cast<double>(m));
  } else if (e0_value >= half_log3) {
    witness.regime = WitnessRegime::fibonacci;
    witness.k0 = 1;
    witness.source = PrefixSource(GapWordFamily{1});
    witness.claimed_entropy = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  } else {
    unsigned k0 = select_k0(e0_value);
    witness.regime = WitnessRegime::gap;
    witness.k0 = k0;
    witness.source = PrefixSource(GapWordFamily{k0});
    witness.claimed_entropy = std::log(beta(k0));
  }
  if (!(witness.claimed_entropy > 0.5 * e0_value)) {
    throw Error(Errc::numerical_failure,
                fmt::format("witness entropy {} does not exceed E0 / 2 = {}",
                            witness.claimed_entropy, 0.5 * e0_value));
  }
  return witness;
}

}  // namespace wordentropy
