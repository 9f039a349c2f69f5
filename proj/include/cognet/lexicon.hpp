#pragma once

// Affect lexicons (valence polarity, NRC-style emotions, stopwords) and
// free-association norms.

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cognet {

enum class Valence : std::int8_t { Negative = -1, Neutral = 0, Positive = 1 };

std::string_view to_string(Valence v);

// Alphabetical, as in the NRC lexicon. The index is the EmotionSet bit.
enum class Emotion : std::uint8_t { Anger, Anticipation, Disgust, Fear, Joy, Sadness, Surprise, Trust };

inline constexpr std::size_t kEmotionCount = 8;
inline constexpr std::array<Emotion, kEmotionCount> kEmotions = {
    Emotion::Anger, Emotion::Anticipation, Emotion::Disgust, Emotion::Fear,
    Emotion::Joy,   Emotion::Sadness,      Emotion::Surprise, Emotion::Trust};

using EmotionSet = std::bitset<kEmotionCount>;

std::string_view to_string(Emotion e);
std::optional<Emotion> parse_emotion(std::string_view name);

struct ValenceScale {
    double q1 = 0.0;  // 25th percentile of the score column
    double q3 = 0.0;  // 75th percentile

    // Strictly below q1 is Negative, strictly above q3 Positive; ties are Neutral.
    Valence classify(double score) const;
};

// Linear-interpolation quantile (Hyndman-Fan type 7), p in [0, 1].
double interpolated_quantile(std::vector<double> values, double p);

struct AffectLexicons {
    std::unordered_map<std::string, Valence> valence;
    std::unordered_map<std::string, double> valence_score;
    ValenceScale scale;
    // Every lemma listed in the emotion file, including those with no emotion.
    std::map<std::string, EmotionSet> emotions;
    std::set<std::string> stopwords;

    // Lemmas absent from the valence lexicon are Neutral.
    Valence valence_of(const std::string& lemma) const;
    EmotionSet emotions_of(const std::string& lemma) const;
    bool is_stopword(const std::string& lemma) const { return stopwords.contains(lemma); }

    // Sorted lemma list of the emotion lexicon.
    std::vector<std::string> emotion_vocabulary() const;
};

// Valence TSV: lemma<TAB>score. Quartiles are taken over the whole score column.
void load_valence(const std::filesystem::path& path, AffectLexicons& lex);
// Emotion TSV: lemma<TAB>emotion<TAB>flag (flag 0/1). Rows named "positive" or
// "negative" (NRC sentiment columns) are accepted and ignored.
void load_emotions(const std::filesystem::path& path, AffectLexicons& lex);
// One lemma per line.
void load_stopwords(const std::filesystem::path& path, AffectLexicons& lex);

AffectLexicons load_lexicons(const std::filesystem::path& valence_path,
                             const std::filesystem::path& emotion_path,
                             const std::filesystem::path& stopword_path);

struct Association {
    std::string cue;
    std::string response;
    std::uint64_t count = 1;
};

struct FreeAssociationData {
    std::vector<Association> pairs;
    std::size_t dropped_self_pairs = 0;
};

// TSV cue<TAB>response[<TAB>count]; lemmas normalized like corpus lemmas.
FreeAssociationData load_free_associations(const std::filesystem::path& path,
                                           const std::set<std::string>& person_placeholders = {});

}  // namespace cognet
