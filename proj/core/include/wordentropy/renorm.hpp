#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wordentropy/error.hpp"
#include "wordentropy/word.hpp"

namespace wordentropy {

/// A stands for the block a, B for the block b a^s.
enum class Token : std::uint8_t { A, B };

char to_char(Token token) noexcept;

struct BlockParse {
  std::vector<Token> tokens;
  Word leftover;  // proper prefix of the block that was cut off by the end
};

/// Greedy left-to-right parse of w[offset..] over {a, b a^s}. A letter equal
/// to a's first letter starts an A, any other letter starts a B; since a and
/// b start differently the parse is unique. Throws ParseMismatch at the first
/// letter that disagrees with the block being matched.
BlockParse parse_blocks(const Word& w, const Word& a, const Word& b, unsigned s,
                        std::size_t offset = 0);

enum class DoubleClass { aa_only, bb_only, neither, both };

std::string_view to_string(DoubleClass cls) noexcept;

/// Which of the digrams AA, BB occur at token index >= 1 (0-based). The digram
/// starting at index 0 is the allowed exception "in the first positions".
DoubleClass classify_double(std::span<const Token> tokens);

/// One coarsening decision taken by renormalize.
struct RenormStep {
  Word a;
  Word b;
  unsigned s = 1;
  std::size_t skip = 0;
  std::size_t token_count = 0;
  DoubleClass doubles = DoubleClass::neither;
};

/// Certificate that w[skip..] lies in {a, b a^s}* with (s+1)|a| + |b| > k.
struct Renormalization {
  unsigned k = 0;
  Word a;
  Word b;
  unsigned s = 1;
  std::size_t skip = 0;
  std::vector<Token> tokens;
  Word leftover;
  std::vector<RenormStep> history;

  std::size_t measure() const noexcept {
    return (s + 1) * a.size() + b.size();
  }
  Word block_b() const { return b.concat(a.power(s)); }

  /// Maximal runs of equal tokens, in order.
  std::vector<std::pair<Token, std::size_t>> token_runs() const;

  /// Exponents s_j in w[skip..] = a^{s_0} b a^{s_1} b a^{s_2} ... for every
  /// b-block whose following a-run is complete, i.e. all but the last B.
  std::vector<std::size_t> gap_exponents() const;
};

/// Refusal from renormalize. Carries the certificate reached so far when the
/// failure happened mid-iteration.
class RenormError : public Error {
 public:
  RenormError(Errc code, const std::string& what,
              std::optional<Renormalization> partial = std::nullopt);

  const std::optional<Renormalization>& partial() const noexcept {
    return partial_;
  }

 private:
  std::optional<Renormalization> partial_;
};

/// Shortest prefix renormalize accepts for order k: 8 k (k + 1).
constexpr std::size_t min_renorm_length(unsigned k) noexcept {
  return std::size_t{8} * k * (k + 1);
}

/// Iterated desubstitution of a pre-Sturmian prefix of order k.
///
/// Starts from ({0, 10}) or ({1, 01}) depending on which of 00/11 is absent,
/// then coarsens while (s+1)|a| + |b| <= k: when BB does not occur past the
/// first token the blocks become {a, b a^{s+1}}, when AA does not occur they
/// become {b a^s, a b a^s}; if neither occurs the first rule is used. At each
/// level the incomplete leading run of tokens moves into `skip`, followed by
/// up to two more tokens when the coarsened blocks still fail to parse.
///
/// Refusals (RenormError codes): invalid_argument for non-binary input,
/// insufficient_data below min_renorm_length or when the token stream runs
/// out, not_pre_sturmian when p(n) > n + 1 for some n <= k or both AA and BB
/// occur, periodic_suspect when p(n) < n + 1 or the tail is a single token.
/// Aperiodicity of the infinite extension is assumed, not proven.
Renormalization renormalize(const Word& w, unsigned k);

/// Tokens substituted back into letters, followed by the leftover.
Word decode(const Renormalization& r);

/// log 2 / |a|: every factor of the parsed tail is fixed by its offset inside
/// a block and at most |a| + |b| + ceil(n / |a|) binary choices.
double entropy_upper_from_renorm(const Renormalization& r);

/// The finite-n form of the same count, (|a| + |b| + ceil(n / |a|)) log 2 / n.
double entropy_upper_from_renorm(const Renormalization& r, std::size_t n);

}  // namespace wordentropy
