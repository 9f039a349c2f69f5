#pragma once

// Batch pipeline behind the command-line tool: build networks from a
// corpus, then run the balance, structure and profile analyses on the
// stored edge lists. Every report carries the tool version, seed and a hash
// of the configuration that produced it; a report whose hash matches the
// current configuration is reused instead of recomputed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace cognet {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct RunConfig {
    std::filesystem::path corpus;
    std::filesystem::path valence;
    std::filesystem::path emotions;
    std::filesystem::path stopwords;
    std::filesystem::path fa;  // optional
    std::filesystem::path out;
    std::filesystem::path focus_file;  // optional, one lemma per line
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    std::uint64_t min_weight = 2;
    std::vector<std::string> focus{"love", "want", "help", "life", "i"};
    std::string chi2_focus = "i";
    std::vector<std::string> placeholders;
    std::size_t clusters = 4;
    std::size_t hubs = 10;
    std::size_t top_k = 30;        // closeness ranking rows
    std::size_t rank_drop_k = 40;  // lemmas in the rank-drop table
    std::size_t rewire_multiplier = 10;
    std::size_t workers = 0;  // 0: all cores
    bool one_doc_per_file = false;
    bool covered_denominator = false;
    bool corpus_universe = false;
    bool force = false;
};

enum class StepStatus { Computed, Cached };

// Each step reads its inputs from `config.out` (networks written by build)
// and writes its report there. Errors are InputError or AnalysisError.
StepStatus run_build(const RunConfig& config);
StepStatus run_balance(const RunConfig& config);
StepStatus run_structure(const RunConfig& config);
StepStatus run_profile(const RunConfig& config);

// Canonical configuration of a step (paths replaced by content digests) and
// its hash, as embedded in the step's report.
nlohmann::json step_config(const std::string& step, const RunConfig& config);
std::string config_hash(const nlohmann::json& step_config);

// Focus lemmas from the config plus the focus file, lowercased, deduplicated
// in first-seen order.
std::vector<std::string> focus_lemmas(const RunConfig& config);

}  // namespace cognet
