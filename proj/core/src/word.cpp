#include "wordentropy/word.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "wordentropy/error.hpp"
#include "wordentropy/gaplang.hpp"

namespace wordentropy {

Alphabet::Alphabet(unsigned q) : q_(q) {
  if (q < 2 || q > 256) {
    throw Error(Errc::invalid_argument,
                "alphabet size must lie in [2, 256], got " + std::to_string(q));
  }
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!alphabet_.contains(letters_[i])) {
      throw Error(Errc::invalid_argument,
                  "letter " + std::to_string(letters_[i]) + " at index " +
                      std::to_string(i) + " is outside the alphabet of size " +
                      std::to_string(alphabet_.size()));
    }
  }
}

Word Word::from_string(std::string_view digits, std::optional<unsigned> q) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  unsigned max_digit = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') {
      throw Error(Errc::format_error, "non-digit character at offset " +
                                          std::to_string(i) + " in word text");
    }
    auto d = static_cast<unsigned>(c - '0');
    max_digit = std::max(max_digit, d);
    letters.push_back(static_cast<Letter>(d));
  }
  unsigned size = q.value_or(std::max(2u, max_digit + 1));
  return Word(Alphabet(size), std::move(letters));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, size());
  return Word(alphabet_, std::vector<Letter>(letters_.begin(),
                                             letters_.begin() + n));
}

Word Word::substr(std::size_t pos, std::size_t n) const {
  if (pos > size()) {
    throw Error(Errc::out_of_range, "substring start beyond end of word");
  }
  n = std::min(n, size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + pos,
                                             letters_.begin() + pos + n));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::power(std::size_t times) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    out.insert(out.end(), letters_.begin(), letters_.end());
  }
  return Word(alphabet_, std::move(out));
}

bool Word::contains_factor(std::span<const Letter> factor) const {
  return std::search(letters_.begin(), letters_.end(), factor.begin(),
                     factor.end()) != letters_.end();
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(static_cast<char>('0' + l));
  return out;
}

Word drop_prefix(const Word& w, std::size_t m) {
  if (m > w.size()) {
    throw Error(Errc::out_of_range, "cannot drop " + std::to_string(m) +
                                        " letters from a word of length " +
                                        std::to_string(w.size()));
  }
  return w.substr(m, w.size() - m);
}

Word periodic_word(const Word& pattern, std::size_t n) {
  if (pattern.empty()) {
    throw Error(Errc::invalid_argument, "periodic pattern must be nonempty");
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = pattern[i % pattern.size()];
  return Word(pattern.alphabet(), std::move(out));
}

Word champernowne_word(unsigned q, std::size_t n) {
  Alphabet alphabet(q);
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t m = 1; out.size() < n; ++m) {
    std::vector<Letter> block(m, 0);
    while (true) {
      for (Letter l : block) {
        if (out.size() == n) break;
        out.push_back(l);
      }
      if (out.size() == n) break;
      // odometer increment; stop after the last word of this length
      std::size_t pos = m;
      while (pos > 0 && block[pos - 1] == q - 1) block[--pos] = 0;
      if (pos == 0) break;
      ++block[pos - 1];
    }
  }
  return Word(alphabet, std::move(out));
}

Word sturmian_word(std::span<const unsigned> cf, std::size_t n) {
  if (cf.empty()) {
    throw Error(Errc::invalid_argument,
                "continued-fraction coefficient list must be nonempty");
  }
  for (unsigned a : cf) {
    if (a < 1) {
      throw Error(Errc::invalid_argument,
                  "continued-fraction coefficients must be >= 1");
    }
  }
  std::vector<Letter> previous{1};
  std::vector<Letter> current{0};
  for (std::size_t j = 0; current.size() < n; ++j) {
    std::vector<Letter> next;
    unsigned a = cf[j % cf.size()];
    next.reserve(current.size() * a + previous.size());
    for (unsigned i = 0; i < a; ++i) {
      next.insert(next.end(), current.begin(), current.end());
    }
    next.insert(next.end(), previous.begin(), previous.end());
    previous = std::move(current);
    current = std::move(next);
  }
  current.resize(n);
  return Word(Alphabet::binary(), std::move(current));
}

Word gap_word(unsigned k, std::size_t n) {
  if (k < 1) throw Error(Errc::invalid_argument, "gap word needs k >= 1");
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t m = 1; out.size() < n; ++m) {
    for (const Word& block : enumerate_gap_words(k, m)) {
      for (Letter l : block) {
        if (out.size() == n) break;
        out.push_back(l);
      }
      for (unsigned z = 0; z < k && out.size() < n; ++z) out.push_back(0);
      if (out.size() == n) break;
    }
  }
  return Word(Alphabet::binary(), std::move(out));
}

Word read_word_file(const std::filesystem::path& path,
                    std::optional<unsigned> q) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open word file " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return Word::from_string(text, q);
}

void write_word_file(const std::filesystem::path& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::io_error, "cannot write word file " + path.string());
  }
  out << w.to_string() << '\n';
}

}  // namespace wordentropy
