#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wordentropy/bigint.hpp"
#include "wordentropy/bound.hpp"
#include "wordentropy/prefix_source.hpp"

namespace wordentropy {

enum class WitnessRegime { full_shift, fibonacci, gap };

std::string_view to_string(WitnessRegime regime) noexcept;

/// An explicit word whose entropy certifies E_W(f) >= claimed_entropy.
struct Witness {
  WitnessRegime regime = WitnessRegime::full_shift;
  unsigned m = 0;   // alphabet size, full_shift only
  unsigned k0 = 0;  // gap parameter, 1 for fibonacci
  PrefixSource source;
  double claimed_entropy = 0.0;
  double e0 = 0.0;

  /// Complexity of the infinite witness word: m^n, F_{n+2} or q_k0(n).
  std::vector<BigInt> exact_profile(std::size_t horizon) const;
};

/// The k0 >= 2 with gamma_{k0} <= e0 < gamma_{k0-1}; needs 0 < e0 < gamma_1.
unsigned select_k0(double e0);

/// Picks the witness for f by the size of E0(f):
///   E0 >= log 2             full shift on m = floor(exp E0) letters, log m
///   log 3 / 2 <= E0 < log 2  golden-mean word gap_word(1), log golden ratio
///   E0 < log 3 / 2          gap_word(k0), log beta_{k0}
/// f must dominate max{n + 1, exp(E0 n)}; this is checked up to
/// `envelope_check` (or the table's end). Throws degenerate_bound for E0 <= 0.
Witness lower_bound_witness(const BoundFunction& f,
                            std::size_t envelope_check = 64);

}  // namespace wordentropy
