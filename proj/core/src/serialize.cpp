#include "wordentropy/serialize.hpp"

#include <ostream>

#include <fmt/format.h>

namespace wordentropy {

namespace {

using nlohmann::json;

// Larger censuses are summarized by their bucket counts only.
constexpr std::size_t kMaxListedGaps = 4096;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

void to_json(json& j, const Word& w) { j = w.to_string(); }

void to_json(json& j, const ComplexityProfile& profile) {
  j = json{{"source_length", profile.source_length()},
           {"horizon", profile.horizon()},
           {"p", std::vector<std::uint64_t>(profile.values().begin(),
                                             profile.values().end())}};
}

void to_json(json& j, const EntropyEstimate& estimate) {
  j = json{{"best_upper", estimate.best_upper},
           {"best_n", estimate.best_n},
           {"log_p_n_over_n", estimate.per_n}};
}

void to_json(json& j, const LemmaBetaReport& report) {
  json failures = json::array();
  for (const LemmaBetaFailure& f : report.failures) {
    failures.push_back(
        {{"r", f.r}, {"inequality", f.inequality}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j = json{{"k", report.k},
           {"r_max", report.r_max},
           {"beta", report.beta},
           {"ok", report.ok()},
           {"failures", failures}};
}

void to_json(json& j, const GapLanguage& language) {
  json table = json::array();
  for (const BigInt& q : language.q_table) table.push_back(q.str());
  j = json{{"k", language.k},
           {"beta", language.beta},
           {"gamma", language.gamma},
           {"q", table}};
}

void to_json(json& j, const RenormStep& step) {
  j = json{{"a", step.a},
           {"b", step.b},
           {"s", step.s},
           {"skip", step.skip},
           {"token_count", step.token_count},
           {"doubles", to_string(step.doubles)}};
}

void to_json(json& j, const Renormalization& r) {
  json runs = json::array();
  for (const auto& [token, length] : r.token_runs()) {
    runs.push_back(json::array({std::string(1, to_char(token)), length}));
  }
  j = json{{"k", r.k},
           {"a", r.a},
           {"b", r.b},
           {"s", r.s},
           {"skip", r.skip},
           {"measure", r.measure()},
           {"token_count", r.tokens.size()},
           {"leftover", r.leftover},
           {"token_run_lengths", runs},
           {"history", r.history}};
}

void to_json(json& j, const CStarReport& report) {
  json violation_ii = nullptr;
  if (report.violation_ii) {
    violation_ii = json::array({report.violation_ii->first, report.violation_ii->second});
  }
  j = json{{"holds", report.holds()},
           {"holds_i", report.holds_i},
           {"violation_i", optional_json(report.violation_i)},
           {"holds_ii", report.holds_ii},
           {"violation_ii", violation_ii}};
}

void to_json(json& j, const Witness& witness) {
  j = json{{"regime", to_string(witness.regime)},
           {"source", witness.source.spec()},
           {"claimed_entropy", witness.claimed_entropy},
           {"e0", witness.e0}};
  if (witness.regime == WitnessRegime::full_shift) j["m"] = witness.m;
  if (witness.regime != WitnessRegime::full_shift) j["k0"] = witness.k0;
}

void to_json(json& j, const GapCensus& census) {
  json buckets = json::array();
  for (std::size_t r = 0; r < census.bucket_count(); ++r) {
    buckets.push_back({{"r", r},
                       {"count", census.bucket_counts[r]},
                       {"bound", census.bucket_bound(r)}});
  }
  j = json{{"k", census.k},
           {"epsilon", census.epsilon},
           {"heuristic", census.heuristic},
           {"distinct_gaps", census.gaps.size()},
           {"buckets", buckets},
           {"bucket_bounds_hold", census.bucket_bounds_hold()},
           {"t", census.t},
           {"h", census.h}};
  if (census.gaps.size() <= kMaxListedGaps) j["gaps"] = census.gaps;
}

void to_json(json& j, const CharacteristicModel& model) {
  j = json{{"k", model.k},
           {"cutoff", model.cutoff},
           {"gap_count", model.gaps.size()},
           {"lambda_hat", model.lambda_hat},
           {"log_lambda", model.log_lambda},
           {"sigma", optional_json(model.sigma)},
           {"residual", model.residual}};
}

void to_json(json& j, const CorpusEntry& entry) {
  j = json{{"label", entry.label},
           {"prefix_length", entry.prefix_length},
           {"profile_horizon", entry.profile_horizon},
           {"admissible", entry.admissible},
           {"first_violation", optional_json(entry.first_violation)},
           {"measured_best_upper", entry.measured_best_upper}};
  if (!entry.refusal.empty()) j["refusal"] = entry.refusal;
  if (entry.certificate) {
    j["certificate"] = *entry.certificate;
    j["renorm_upper"] = entry.renorm_upper;
    j["finite_upper"] = entry.finite_upper;
    j["consistent"] = entry.consistent;
  }
  if (entry.census) j["census"] = *entry.census;
  if (entry.model) {
    j["model"] = *entry.model;
    j["sigma_below_bound"] = entry.sigma_below_bound;
  }
}

void to_json(json& j, const RatioReport& report) {
  json certificates = json::array();
  for (const CorpusEntry& entry : report.corpus) certificates.push_back(entry);
  j = json{{"f_family", report.f_family},
           {"k", report.k},
           {"c", report.c},
           {"epsilon", report.epsilon},
           {"epsilon_window_lower", report.epsilon_window_lower},
           {"heuristic", report.heuristic},
           {"e0", report.e0},
           {"cstar", report.cstar},
           {"witnesses", json::array({report.witness})},
           {"synthetic_census", report.synthetic_census},
           {"synthetic_model", report.synthetic_model},
           {"certificates", certificates},
           {"sigma_bound", report.sigma_bound},
           {"target_entropy", report.target_entropy},
           {"max_measured_entropy", report.max_measured_entropy},
           {"lambda_hat", report.lambda_hat},
           {"sigma", report.sigma},
           {"rho_interval", report.rho_interval}};
}

void write_corpus_csv(std::ostream& out, const RatioReport& report) {
  out << "label,prefix_length,admissible,measured_best_upper,a_len,b_len,s,"
         "finite_upper,consistent,distinct_gaps,lambda_hat,sigma,refusal\n";
  for (const CorpusEntry& e : report.corpus) {
    out << fmt::format("{},{},{},{:.12g},", csv_field(e.label), e.prefix_length,
                       e.admissible ? 1 : 0, e.measured_best_upper);
    if (e.certificate) {
      out << fmt::format("{},{},{},{:.12g},{},", e.certificate->a.size(),
                         e.certificate->b.size(), e.certificate->s,
                         e.finite_upper, e.consistent ? 1 : 0);
    } else {
      out << ",,,,,";
    }
    if (e.model) {
      out << fmt::format("{},{:.12g},{:.12g},", e.census->gaps.size(),
                         e.model->lambda_hat, e.model->sigma.value_or(0.0));
    } else {
      out << ",,,";
    }
    out << csv_field(e.refusal) << '\n';
  }
}

}  // namespace wordentropy
