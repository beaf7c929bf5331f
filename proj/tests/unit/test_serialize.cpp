#include <sstream>

#include <gtest/gtest.h>

#include "wordentropy/complexity.hpp"
#include "wordentropy/serialize.hpp"

namespace we = wordentropy;
using nlohmann::json;

TEST(Serialize, ProfileAndEstimate) {
  const we::ComplexityProfile p = we::complexity_profile(we::Word::from_string("010101"), 3);
  const json j = p;
  EXPECT_EQ(j.at("p"), json({1, 2, 2, 2}));
  EXPECT_EQ(j.at("horizon"), 3);
  EXPECT_EQ(j.at("source_length"), 6);
  const json e = we::entropy_upper(p);
  EXPECT_EQ(e.at("best_n"), 3);
  EXPECT_EQ(e.at("log_p_n_over_n").size(), 3u);
}

TEST(Serialize, GapLanguageKeepsExactCounts) {
  const json j = we::GapLanguage::build(1, 400);
  // q_1(400) does not fit in a double, so counts travel as decimal strings
  const std::string last = j.at("q").back().get<std::string>();
  EXPECT_GT(last.size(), 80u);
  EXPECT_EQ(j.at("q")[10], "144");
  EXPECT_TRUE(j.contains("beta"));
  EXPECT_TRUE(j.contains("gamma"));
}

TEST(Serialize, RenormalizationCertificate) {
  const std::vector<unsigned> golden{1};
  const json j = we::renormalize(we::sturmian_word(golden, 4000), 4);
  EXPECT_EQ(j.at("a"), "10");
  EXPECT_EQ(j.at("b"), "0");
  EXPECT_EQ(j.at("s"), 1);
  EXPECT_EQ(j.at("measure"), 5);
  ASSERT_FALSE(j.at("token_run_lengths").empty());
  const json& run = j.at("token_run_lengths")[0];
  EXPECT_TRUE(run[0] == "A" || run[0] == "B");
  EXPECT_GE(run[1].get<int>(), 1);
  EXPECT_TRUE(j.at("history").is_array());
}

TEST(Serialize, RatioReportAndCorpusCsv) {
  we::RatioOptions options;
  options.k = 12;
  options.heuristic_override = true;
  options.prefix_length = 3000;
  options.random_words = 1;
  const we::RatioReport report = we::ratio_experiment(options);
  const json j = report;
  for (const char* key : {"f_family", "epsilon", "cstar", "witnesses", "synthetic_census",
                          "synthetic_model", "certificates", "lambda_hat", "sigma",
                          "rho_interval"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("f_family"), "theta_k:12");
  EXPECT_EQ(j.at("certificates").size(), report.corpus.size());

  std::ostringstream csv;
  we::write_corpus_csv(csv, report);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "label,prefix_length,admissible,measured_best_upper,a_len,b_len,s,"
            "finite_upper,consistent,distinct_gaps,lambda_hat,sigma,refusal");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, report.corpus.size());
  // labels with commas are quoted so the column count stays fixed
  EXPECT_NE(csv.str().find("\"sturmian:1,2\""), std::string::npos);
}
