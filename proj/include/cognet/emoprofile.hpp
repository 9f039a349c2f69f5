#pragma once

// Semantic frames and their emotional profiles against random word samples.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cognet/lexicon.hpp"
#include "cognet/network.hpp"
#include "cognet/stats.hpp"

namespace cognet {

struct SemanticFrame {
    std::string focus;
    std::vector<std::string> neighbors;  // sorted
    NetworkKind source = NetworkKind::CO;

    bool empty() const noexcept { return neighbors.empty(); }
};

// First neighbors of `focus` minus stopwords. Throws InputError if absent.
SemanticFrame semantic_frame(const LexicalNetwork& net, const std::string& focus,
                             const std::set<std::string>& stopwords);

struct ProfileOptions {
    std::size_t n_samples = 1000;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    // Divide by lexicon-covered neighbors instead of all neighbors.
    bool covered_denominator = false;
    // Sampling universe; the emotion lexicon vocabulary when unset.
    std::optional<std::vector<std::string>> universe;
};

struct EmotionScore {
    Emotion emotion = Emotion::Anger;
    std::size_t count = 0;
    double observed = 0;
    Summary null;
    double threshold = 0;  // (1 - alpha) nearest-rank quantile of the null
    std::optional<double> z;
    bool significant = false;  // observed > threshold
};

struct EmotionProfile {
    std::string focus;
    NetworkKind source = NetworkKind::CO;
    std::size_t sample_size = 0;  // frame size
    std::size_t denominator = 0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    std::array<EmotionScore, kEmotionCount> scores{};  // indexed by Emotion

    const EmotionScore& score(Emotion e) const { return scores[static_cast<std::size_t>(e)]; }
};

// Streams are derived from (seed, focus), so profiles of different foci are
// independent and the same focus always sees the same null draws.
EmotionProfile emotion_profile(const SemanticFrame& frame, const AffectLexicons& lex, const ProfileOptions& opts);

struct ProfileComparison {
    EmotionProfile a;
    EmotionProfile b;
    std::vector<Emotion> only_a;  // significant in a but not b
    std::vector<Emotion> only_b;
};

ProfileComparison profile_comparison(const LexicalNetwork& net_a, const LexicalNetwork& net_b,
                                     const std::string& focus, const AffectLexicons& lex,
                                     const ProfileOptions& opts);

// Plutchik wheel order.
inline constexpr std::array<Emotion, kEmotionCount> kWheelOrder = {
    Emotion::Anger, Emotion::Anticipation, Emotion::Joy,     Emotion::Trust,
    Emotion::Fear,  Emotion::Surprise,     Emotion::Sadness, Emotion::Disgust};

struct WheelPoint {
    Emotion emotion = Emotion::Anger;
    std::optional<double> z;
    bool significant = false;
    std::optional<double> threshold_z;  // z of the empirical significance threshold
};

struct WheelRecord {
    std::string focus;
    NetworkKind source = NetworkKind::CO;
    double alpha = 0.05;
    double radius = 0;  // one-sided normal quantile at 1 - alpha
    std::vector<WheelPoint> points;
};

WheelRecord wheel_export(const EmotionProfile& profile);

}  // namespace cognet
