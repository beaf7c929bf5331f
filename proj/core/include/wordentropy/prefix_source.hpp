#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordentropy/word.hpp"

namespace wordentropy {

struct PeriodicFamily {
  Word pattern;
};

struct ChampernowneFamily {
  unsigned q = 2;
};

struct SturmianFamily {
  std::vector<unsigned> cf;
};

struct GapWordFamily {
  unsigned k = 1;
};

/// A deterministic infinite word, materialized only as bounded prefixes.
///
/// Family specs use the compact `name:param,param` syntax:
///   periodic:0110      champernowne:3      sturmian:1,1,1      gapword:2
class PrefixSource {
 public:
  using Family =
      std::variant<PeriodicFamily, ChampernowneFamily, SturmianFamily,
                   GapWordFamily>;

  explicit PrefixSource(Family family);

  static PrefixSource parse(std::string_view spec);

  /// First n letters. generate(m) is a prefix of generate(n) for m <= n.
  Word generate(std::size_t n) const;
  Letter at(std::size_t i) const;

  /// A prefix length at which every length-n factor of the infinite word has
  /// already occurred. Exact for periodic, champernowne and gapword; for
  /// sturmian it is the Morse-Hedlund recurrence bound computed from the
  /// standard-word lengths.
  std::size_t witness_length(std::size_t n) const;

  std::string tag() const;
  std::string spec() const;
  const Family& family() const noexcept { return family_; }

 private:
  Family family_;
};

/// Generic heuristic: on a prefix of length L, lengths n <= L/4 are treated as
/// witnessed. Families with an exact witness_length should prefer that.
constexpr std::size_t witness_horizon(std::size_t prefix_length) noexcept {
  return prefix_length / 4;
}

}  // namespace wordentropy
