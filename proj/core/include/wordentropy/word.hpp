#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordentropy {

using Letter = std::uint8_t;

/// The letters {0, ..., q-1}, with 2 <= q <= 256.
class Alphabet {
 public:
  explicit Alphabet(unsigned q);

  static Alphabet binary() { return Alphabet(2); }

  unsigned size() const noexcept { return q_; }
  bool contains(unsigned letter) const noexcept { return letter < q_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned q_;
};

/// A finite word over an Alphabet, stored one byte per letter.
///
/// Words are values: every operation that "changes" a word returns a new one.
/// The empty word is valid over any alphabet.
class Word {
 public:
  Word() : alphabet_(Alphabet::binary()) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses a string of digits '0'..'9'. When `q` is omitted the alphabet
  /// size is 1 + the largest digit, but never less than 2.
  static Word from_string(std::string_view digits,
                          std::optional<unsigned> q = std::nullopt);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t n) const;
  Word concat(const Word& other) const;
  Word power(std::size_t times) const;

  bool contains_factor(std::span<const Letter> factor) const;
  bool contains_factor(const Word& factor) const {
    return contains_factor(factor.letters());
  }

  /// Digit rendering; only meaningful for q <= 10.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Letters m..end of `w`, i.e. the m-th iterate of the one-sided shift.
Word drop_prefix(const Word& w, std::size_t m);

/// First n letters of pattern^infinity.
Word periodic_word(const Word& pattern, std::size_t n);

/// First n letters of the concatenation of all words over {0..q-1} of length
/// 1, 2, 3, ... each level in lexicographic order. Every word of length m
/// occurs in it, so its complexity is q^m; this is the deterministic stand-in
/// for a normal sequence.
Word champernowne_word(unsigned q, std::size_t n);

/// First n letters of the characteristic Sturmian word driven by the partial
/// quotients `cf`, built with the standard-word recursion
///   s_{-1} = 1, s_0 = 0, s_{j+1} = s_j^{a_{j+1}} s_{j-1}.
/// `cf` is read cyclically, so a finite list stands for the purely periodic
/// expansion [a_1, ..., a_r, a_1, ...] and the word is never periodic.
Word sturmian_word(std::span<const unsigned> cf, std::size_t n);

/// First n letters of w^(k): for m = 1, 2, ... every word of length m whose 1s
/// are separated by at least k zeros, in lexicographic order, each followed
/// by 0^k.
Word gap_word(unsigned k, std::size_t n);

/// Word files hold one line of digits followed by a newline.
Word read_word_file(const std::filesystem::path& path,
                    std::optional<unsigned> q = std::nullopt);
void write_word_file(const std::filesystem::path& path, const Word& w);

}  // namespace wordentropy
