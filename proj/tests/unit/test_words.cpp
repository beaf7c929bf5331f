#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "wordentropy/prefix_source.hpp"
#include "wordentropy/word.hpp"

namespace we = wordentropy;
using we::Errc;
using we::Word;

namespace {

std::string text(const Word& w) { return w.to_string(); }

}  // namespace

TEST(Word, FromStringInfersAlphabet) {
  EXPECT_EQ(Word::from_string("0120").alphabet().size(), 3u);
  EXPECT_EQ(Word::from_string("000").alphabet().size(), 2u);
  EXPECT_EQ(Word::from_string("").size(), 0u);
  EXPECT_EQ(Word::from_string("01", 5).alphabet().size(), 5u);
}

TEST(Word, RejectsBadInput) {
  EXPECT_ERRC(Word::from_string("01x"), Errc::format_error);
  EXPECT_ERRC(Word::from_string("012", 2), Errc::invalid_argument);
  EXPECT_ERRC(we::Alphabet(1), Errc::invalid_argument);
}

TEST(Word, SlicingAndConcatenation) {
  Word w = Word::from_string("0100");
  EXPECT_EQ(text(w.prefix(2)), "01");
  EXPECT_EQ(text(w.substr(1, 2)), "10");
  EXPECT_EQ(text(w.concat(Word::from_string("11"))), "010011");
  EXPECT_EQ(text(Word::from_string("10").power(3)), "101010");
  EXPECT_TRUE(w.contains_factor(Word::from_string("00")));
  EXPECT_FALSE(w.contains_factor(Word::from_string("11")));
}

TEST(Word, DropPrefixExamples) {
  Word w = Word::from_string("0100");
  EXPECT_EQ(text(we::drop_prefix(w, 1)), "100");
  EXPECT_EQ(text(we::drop_prefix(w, 0)), "0100");
  EXPECT_EQ(text(we::drop_prefix(w, 4)), "");
  EXPECT_ERRC(we::drop_prefix(w, 5), Errc::out_of_range);
}

TEST(PeriodicWord, Examples) {
  EXPECT_EQ(text(we::periodic_word(Word::from_string("01"), 6)), "010101");
  EXPECT_EQ(text(we::periodic_word(Word::from_string("0"), 3)), "000");
  EXPECT_EQ(text(we::periodic_word(Word::from_string("100"), 7)), "1001001");
  EXPECT_ERRC(we::periodic_word(Word::from_string(""), 3), Errc::invalid_argument);
}

TEST(ChampernowneWord, Examples) {
  EXPECT_EQ(text(we::champernowne_word(2, 10)), "0100011011");
  EXPECT_EQ(text(we::champernowne_word(2, 2)), "01");
  EXPECT_EQ(text(we::champernowne_word(3, 5)), "01200");
}

TEST(ChampernowneWord, ContainsEveryWordOfEachCompletedLevel) {
  for (unsigned q : {2U, 3U}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      we::PrefixSource source(we::ChampernowneFamily{q});
      Word w = source.generate(source.witness_length(m));
      std::size_t total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= q;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<we::Letter> letters(m);
        std::size_t c = code;
        for (std::size_t i = m; i-- > 0; c /= q) letters[i] = static_cast<we::Letter>(c % q);
        EXPECT_TRUE(w.contains_factor(letters)) << "q=" << q << " m=" << m << " code=" << code;
      }
    }
  }
}

TEST(SturmianWord, GoldenPrefixMatchesFibonacciSubstitution) {
  // 0 -> 01, 1 -> 0 iterated from 0
  std::string fib = "0";
  while (fib.size() < 200) {
    std::string next;
    for (char c : fib) next += c == '0' ? "01" : "0";
    fib = next;
  }
  const std::vector<unsigned> golden{1};
  EXPECT_EQ(text(we::sturmian_word(golden, 13)), "0100101001001");
  EXPECT_EQ(text(we::sturmian_word(golden, 200)), fib.substr(0, 200));
}

TEST(SturmianWord, EdgeCases) {
  const std::vector<unsigned> cf{2, 1};
  EXPECT_EQ(we::sturmian_word(cf, 0).size(), 0u);
  const std::vector<unsigned> bad{1, 0};
  EXPECT_ERRC(we::sturmian_word(bad, 5), Errc::invalid_argument);
  const std::vector<unsigned> empty;
  EXPECT_ERRC(we::sturmian_word(empty, 5), Errc::invalid_argument);
}

TEST(SturmianWord, NeverContainsBothDoubledLetters) {
  for (const std::vector<unsigned>& cf :
       std::vector<std::vector<unsigned>>{{1}, {2}, {3, 1}, {1, 4, 2}, {2, 2, 3, 1}}) {
    Word w = we::sturmian_word(cf, 5000);
    EXPECT_FALSE(w.contains_factor(Word::from_string("00")) &&
                 w.contains_factor(Word::from_string("11")));
  }
}

TEST(GapWord, OnesAreSeparatedByAtLeastKZeros) {
  for (unsigned k = 1; k <= 5; ++k) {
    Word w = we::gap_word(k, 20000);
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 1) continue;
      if (last) EXPECT_GT(i - *last, k) << "k=" << k << " at " << i;
      last = i;
    }
  }
  EXPECT_EQ(we::gap_word(3, 0).size(), 0u);
}

TEST(GapWord, FirstBlocksFollowLexicographicEnumeration) {
  // 0|0 1|0 00|0 01|0 10|0 000|0 ... with k = 1
  EXPECT_EQ(text(we::gap_word(1, 17)), "00100000101000000");
}

TEST(PrefixSource, ParsesFamilySpecs) {
  EXPECT_EQ(we::PrefixSource::parse("periodic:0110").spec(), "periodic:0110");
  EXPECT_EQ(we::PrefixSource::parse("champernowne:3").spec(), "champernowne:3");
  EXPECT_EQ(we::PrefixSource::parse("sturmian:1,1,1").spec(), "sturmian:1,1,1");
  EXPECT_EQ(we::PrefixSource::parse("gapword:2").spec(), "gapword:2");
  EXPECT_ERRC(we::PrefixSource::parse("nosuch:1"), Errc::invalid_argument);
  EXPECT_ERRC(we::PrefixSource::parse("gapword:0"), Errc::invalid_argument);
  EXPECT_ERRC(we::PrefixSource::parse("sturmian:1,,2"), Errc::invalid_argument);
}

TEST(PrefixSource, ExtensionConsistentAndIndexable) {
  for (const char* spec : {"periodic:011", "champernowne:3", "sturmian:2,1,3", "gapword:2"}) {
    we::PrefixSource source = we::PrefixSource::parse(spec);
    Word long_prefix = source.generate(3000);
    for (std::size_t m : {0U, 1U, 17U, 1000U, 3000U}) {
      EXPECT_EQ(source.generate(m), long_prefix.prefix(m)) << spec << " m=" << m;
    }
    for (std::size_t i : {0U, 5U, 2999U}) EXPECT_EQ(source.at(i), long_prefix[i]) << spec;
    EXPECT_EQ(source.generate(3000), long_prefix) << "deterministic";
  }
}

TEST(WordFile, RoundTripAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "wordentropy_words_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "w.txt";
  Word w = Word::from_string("0120012");
  we::write_word_file(path, w);
  EXPECT_EQ(we::read_word_file(path), w);
  {
    std::ofstream crlf(dir / "crlf.txt", std::ios::binary);
    crlf << "0101\r\n";
  }
  EXPECT_EQ(text(we::read_word_file(dir / "crlf.txt")), "0101");
  {
    std::ofstream bad(dir / "bad.txt");
    bad << "01a1\n";
  }
  EXPECT_ERRC(we::read_word_file(dir / "bad.txt"), Errc::format_error);
  EXPECT_ERRC(we::read_word_file(dir / "missing.txt"), Errc::io_error);
  std::filesystem::remove_all(dir);
}
