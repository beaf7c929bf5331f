#pragma once

#include <nlohmann/json.hpp>

#include "wordentropy/bound.hpp"
#include "wordentropy/characteristic.hpp"
#include "wordentropy/complexity.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/ratio.hpp"
#include "wordentropy/renorm.hpp"
#include "wordentropy/witness.hpp"

namespace wordentropy {

// JSON encoders, found by nlohmann::json through argument-dependent lookup.
// Words are written as digit strings and big integers as decimal strings.

void to_json(nlohmann::json& j, const Word& w);
void to_json(nlohmann::json& j, const ComplexityProfile& profile);
void to_json(nlohmann::json& j, const EntropyEstimate& estimate);
void to_json(nlohmann::json& j, const LemmaBetaReport& report);
void to_json(nlohmann::json& j, const GapLanguage& language);
void to_json(nlohmann::json& j, const RenormStep& step);
void to_json(nlohmann::json& j, const Renormalization& r);
void to_json(nlohmann::json& j, const CStarReport& report);
void to_json(nlohmann::json& j, const Witness& witness);
void to_json(nlohmann::json& j, const GapCensus& census);
void to_json(nlohmann::json& j, const CharacteristicModel& model);
void to_json(nlohmann::json& j, const CorpusEntry& entry);
void to_json(nlohmann::json& j, const RatioReport& report);

/// One row per corpus word.
void write_corpus_csv(std::ostream& out, const RatioReport& report);

}  // namespace wordentropy
