#include "wordentropy/renorm.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wordentropy/complexity.hpp"

namespace wordentropy {

namespace {

void check_blocks(const Word& a, const Word& b, unsigned s) {
  if (a.empty() || b.empty()) {
    throw Error(Errc::invalid_argument, "blocks a and b must be nonempty");
  }
  if (a[0] == b[0]) {
    throw Error(Errc::invalid_argument,
                "blocks a and b must start with distinct letters");
  }
  if (s < 1) throw Error(Errc::invalid_argument, "block exponent s must be >= 1");
}

struct TolerantParse {
  std::vector<Token> tokens;
  std::size_t end = 0;  // first letter not covered by a complete token
  std::optional<std::size_t> mismatch;
};

// Greedy parse that stops at the first mismatch instead of throwing.
TolerantParse parse_tolerant(const Word& w, const Word& a, const Word& block_b,
                             std::size_t offset) {
  TolerantParse out;
  std::size_t pos = offset;
  while (pos < w.size()) {
    const Word& block = w[pos] == a[0] ? a : block_b;
    std::size_t available = std::min(block.size(), w.size() - pos);
    for (std::size_t i = 0; i < available; ++i) {
      if (w[pos + i] != block[i]) {
        out.mismatch = pos + i;
        out.end = pos;
        return out;
      }
    }
    if (available < block.size()) break;
    out.tokens.push_back(&block == &a ? Token::A : Token::B);
    pos += block.size();
  }
  out.end = pos;
  return out;
}

bool single_type_tail(std::span<const Token> tokens) {
  if (tokens.size() < 3) return false;
  return std::all_of(tokens.begin() + 1, tokens.end(),
                     [&](Token t) { return t == tokens[1]; });
}

}  // namespace

char to_char(Token token) noexcept { return token == Token::A ? 'A' : 'B'; }

std::string_view to_string(DoubleClass cls) noexcept {
  switch (cls) {
    case DoubleClass::aa_only:
      return "AA_only";
    case DoubleClass::bb_only:
      return "BB_only";
    case DoubleClass::neither:
      return "neither";
    case DoubleClass::both:
      return "both";
  }
  return "unknown";
}

BlockParse parse_blocks(const Word& w, const Word& a, const Word& b, unsigned s,
                        std::size_t offset) {
  check_blocks(a, b, s);
  if (offset > w.size()) {
    throw Error(Errc::out_of_range, "parse offset beyond end of word");
  }
  Word block_b = b.concat(a.power(s));
  TolerantParse parse = parse_tolerant(w, a, block_b, offset);
  if (parse.mismatch) {
    throw ParseMismatch(
        *parse.mismatch,
        fmt::format("letter {} at position {} does not continue the block "
                    "starting at {}",
                    w[*parse.mismatch], *parse.mismatch, parse.end));
  }
  return {std::move(parse.tokens), w.substr(parse.end, w.size() - parse.end)};
}

DoubleClass classify_double(std::span<const Token> tokens) {
  bool aa = false;
  bool bb = false;
  for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == tokens[i + 1]) {
      (tokens[i] == Token::A ? aa : bb) = true;
    }
  }
  if (aa && bb) return DoubleClass::both;
  if (aa) return DoubleClass::aa_only;
  if (bb) return DoubleClass::bb_only;
  return DoubleClass::neither;
}

std::vector<std::pair<Token, std::size_t>> Renormalization::token_runs() const {
  std::vector<std::pair<Token, std::size_t>> runs;
  for (Token t : tokens) {
    if (!runs.empty() && runs.back().first == t) {
      ++runs.back().second;
    } else {
      runs.emplace_back(t, 1);
    }
  }
  return runs;
}

std::vector<std::size_t> Renormalization::gap_exponents() const {
  std::vector<std::size_t> exponents;
  std::optional<std::size_t> current;
  for (Token t : tokens) {
    if (t == Token::B) {
      if (current) exponents.push_back(*current);
      current = s;
    } else if (current) {
      ++*current;
    }
  }
  return exponents;
}

RenormError::RenormError(Errc code, const std::string& what,
                         std::optional<Renormalization> partial)
    : Error(code, what), partial_(std::move(partial)) {}

Renormalization renormalize(const Word& w, unsigned k) {
  if (w.alphabet().size() != 2) {
    throw RenormError(Errc::invalid_argument,
                      "renormalization is defined for binary words only");
  }
  if (k < 1) throw RenormError(Errc::invalid_argument, "order k must be >= 1");
  // Too many factors or both doubled letters refute the input at any
  // length; too few factors only mean something on a long enough prefix.
  const Word zero_zero = Word::from_string("00");
  const Word one_one = Word::from_string("11");
  bool has00 = w.contains_factor(zero_zero);
  bool has11 = w.contains_factor(one_one);
  if (has00 && has11) {
    throw RenormError(Errc::not_pre_sturmian, "both 00 and 11 occur");
  }
  const std::size_t checked = std::min<std::size_t>(k, w.size());
  ComplexityProfile profile = complexity_profile(w, checked);
  for (std::size_t n = 1; n <= checked; ++n) {
    if (profile[n] > n + 1) {
      throw RenormError(Errc::not_pre_sturmian,
                        fmt::format("p({}) = {} exceeds n + 1", n, profile[n]));
    }
  }
  if (w.size() < min_renorm_length(k)) {
    throw RenormError(Errc::insufficient_data,
                      fmt::format("order {} needs at least {} letters, got {}",
                                  k, min_renorm_length(k), w.size()));
  }
  for (std::size_t n = 1; n <= k; ++n) {
    if (profile[n] < n + 1) {
      throw RenormError(Errc::periodic_suspect,
                        fmt::format("p({}) = {} is below n + 1", n, profile[n]));
    }
  }

  Renormalization r;
  r.k = k;
  if (!has11) {
    r.a = Word::from_string("0");
    r.b = Word::from_string("1");
  } else {
    r.a = Word::from_string("1");
    r.b = Word::from_string("0");
  }
  r.s = 1;

  auto reparse = [&](std::size_t offset, std::size_t tail_allowance) {
    Word block_b = r.block_b();
    TolerantParse parse = parse_tolerant(w, r.a, block_b, offset);
    std::optional<BlockParse> out;
    if (!parse.mismatch || w.size() - parse.end <= tail_allowance) {
      out = BlockParse{std::move(parse.tokens),
                       w.substr(parse.end, w.size() - parse.end)};
    }
    return out;
  };

  {
    auto first = reparse(0, r.block_b().size());
    if (!first) {
      throw RenormError(Errc::not_pre_sturmian,
                        "word does not parse over the initial blocks");
    }
    r.tokens = std::move(first->tokens);
    r.leftover = std::move(first->leftover);
  }

  while (true) {
    if (r.tokens.size() < 4) {
      throw RenormError(Errc::insufficient_data,
                        fmt::format("only {} tokens left at measure {}",
                                    r.tokens.size(), r.measure()),
                        r);
    }
    if (single_type_tail(r.tokens)) {
      throw RenormError(Errc::periodic_suspect,
                        fmt::format("token stream is constant after the first "
                                    "token at measure {}",
                                    r.measure()),
                        r);
    }
    if (r.measure() > k) break;

    DoubleClass cls = classify_double(r.tokens);
    r.history.push_back({r.a, r.b, r.s, r.skip, r.tokens.size(), cls});
    if (cls == DoubleClass::both) {
      throw RenormError(Errc::not_pre_sturmian,
                        fmt::format("AA and BB both occur at measure {}",
                                    r.measure()),
                        r);
    }

    const std::size_t old_block_b = r.block_b().size();
    const std::vector<Token> old_tokens = r.tokens;
    if (cls == DoubleClass::bb_only) {
      Word next_a = r.block_b();
      r.b = r.a;
      r.a = std::move(next_a);
      r.s = 1;
    } else {
      ++r.s;
    }
    const std::size_t allowance = r.block_b().size() + old_block_b;

    // The new b-block starts at an old B under the {a, b a^{s+1}} rule and at
    // an old A under the {b a^s, a b a^s} rule. A leading run of the other
    // token is an incomplete run and goes into the skip.
    const RenormStep& previous = r.history.back();
    const Token anchor = cls == DoubleClass::bb_only ? Token::A : Token::B;
    std::size_t leading = 0;
    std::size_t offset = r.skip;
    while (leading < old_tokens.size() && old_tokens[leading] != anchor) {
      offset += old_tokens[leading] == Token::A
                    ? previous.a.size()
                    : previous.b.size() + previous.s * previous.a.size();
      ++leading;
    }
    std::optional<BlockParse> parsed;
    for (std::size_t dropped = 0; dropped <= 2 && !parsed; ++dropped) {
      if (dropped > 0) {
        if (leading + dropped > old_tokens.size()) break;
        Token t = old_tokens[leading + dropped - 1];
        offset += t == Token::A ? previous.a.size()
                                : previous.b.size() + previous.s * previous.a.size();
      }
      parsed = reparse(offset, allowance);
      if (parsed) r.skip = offset;
    }
    if (!parsed) {
      throw RenormError(Errc::not_pre_sturmian,
                        fmt::format("coarsened blocks do not parse the word at "
                                    "measure {}",
                                    r.measure()),
                        r);
    }
    r.tokens = std::move(parsed->tokens);
    r.leftover = std::move(parsed->leftover);
  }
  return r;
}

Word decode(const Renormalization& r) {
  Word block_b = r.block_b();
  std::vector<Letter> out;
  for (Token t : r.tokens) {
    const Word& block = t == Token::A ? r.a : block_b;
    out.insert(out.end(), block.begin(), block.end());
  }
  out.insert(out.end(), r.leftover.begin(), r.leftover.end());
  return Word(Alphabet::binary(), std::move(out));
}

double entropy_upper_from_renorm(const Renormalization& r) {
  return std::log(2.0) / static_cast<double>(r.a.size());
}

double entropy_upper_from_renorm(const Renormalization& r, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "finite renormalization bound needs n >= 1");
  const std::size_t a_len = r.a.size();
  const std::size_t choices = a_len + r.b.size() + (n + a_len - 1) / a_len;
  return static_cast<double>(choices) * std::log(2.0) / static_cast<double>(n);
}

}  // namespace wordentropy
