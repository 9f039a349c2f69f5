#pragma once

// JSON views of analysis results. Keys are sorted by the JSON library, so
// equal inputs serialize to equal bytes.

#include <optional>

#include <json.hpp>

#include "cognet/emoprofile.hpp"
#include "cognet/metrics.hpp"
#include "cognet/signed_balance.hpp"
#include "cognet/stats.hpp"

namespace cognet {

using json = nlohmann::json;

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

void to_json(json& j, const Summary& s);
void to_json(json& j, const TwoProportionResult& r);
void to_json(json& j, const TriadCensus& c);
void to_json(json& j, const TriadFractions& f);
void to_json(json& j, const SignCounts& c);
void to_json(json& j, const EnsembleBalance& e);  // realizations omitted
void to_json(json& j, const BalanceReport& r);
void to_json(json& j, const RankedLemma& r);
void to_json(json& j, const RankDropEntry& e);
void to_json(json& j, const PowerLawFit& f);
void to_json(json& j, const ShrinkageEntry& e);
void to_json(json& j, const ShrinkageResult& r);
void to_json(json& j, const ClusterSummary& c);
void to_json(json& j, const GiantComponentStats& s);
void to_json(json& j, const SemanticFrame& f);
void to_json(json& j, const EmotionScore& s);
void to_json(json& j, const EmotionProfile& p);
void to_json(json& j, const WheelRecord& w);

// Stable text form: two-space indent and a trailing newline.
std::string dump_report(const json& j);

}  // namespace cognet
