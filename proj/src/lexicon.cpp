#include "cognet/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "cognet/corpus.hpp"
#include "cognet/error.hpp"

namespace cognet {

namespace {

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find('\t', start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

// Calls fn(line_no, columns) for each non-blank, non-comment line.
template <typename Fn>
void for_each_row(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        fn(line_no, split_tabs(t));
    }
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace

std::string_view to_string(Valence v) {
    switch (v) {
        case Valence::Negative: return "negative";
        case Valence::Neutral: return "neutral";
        case Valence::Positive: return "positive";
    }
    return "?";
}

std::string_view to_string(Emotion e) { return kEmotionNames[static_cast<std::size_t>(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) {
    const std::string lower = to_lower(name);
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
        if (kEmotionNames[i] == lower) return static_cast<Emotion>(i);
    }
    return std::nullopt;
}

Valence ValenceScale::classify(double score) const {
    if (score < q1) return Valence::Negative;
    if (score > q3) return Valence::Positive;
    return Valence::Neutral;
}

double interpolated_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw InputError("quantile of empty sample");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

Valence AffectLexicons::valence_of(const std::string& lemma) const {
    auto it = valence.find(lemma);
    return it == valence.end() ? Valence::Neutral : it->second;
}

EmotionSet AffectLexicons::emotions_of(const std::string& lemma) const {
    auto it = emotions.find(lemma);
    return it == emotions.end() ? EmotionSet{} : it->second;
}

std::vector<std::string> AffectLexicons::emotion_vocabulary() const {
    std::vector<std::string> out;
    out.reserve(emotions.size());
    for (const auto& [lemma, _] : emotions) out.push_back(lemma);
    return out;
}

void load_valence(const std::filesystem::path& path, AffectLexicons& lex) {
    const std::string name = path.string();
    lex.valence.clear();
    lex.valence_score.clear();
    for_each_row(path, [&](std::size_t line_no, const std::vector<std::string_view>& cols) {
        if (cols.size() < 2) throw ParseError(name, line_no, "expected lemma<TAB>score");
        const auto score = parse_double(cols[1]);
        if (!score) throw ParseError(name, line_no, "non-numeric valence score '" + std::string(cols[1]) + "'");
        const std::string lemma = to_lower(cols[0]);
        if (lemma.empty()) throw ParseError(name, line_no, "empty lemma");
        if (!lex.valence_score.emplace(lemma, *score).second) {
            throw ParseError(name, line_no, "duplicate lemma '" + lemma + "'");
        }
    });
    if (lex.valence_score.empty()) throw InputError(name + ": empty valence lexicon");

    std::vector<double> scores;
    scores.reserve(lex.valence_score.size());
    for (const auto& [_, s] : lex.valence_score) scores.push_back(s);
    lex.scale.q1 = interpolated_quantile(scores, 0.25);
    lex.scale.q3 = interpolated_quantile(std::move(scores), 0.75);
    for (const auto& [lemma, s] : lex.valence_score) lex.valence[lemma] = lex.scale.classify(s);
}

void load_emotions(const std::filesystem::path& path, AffectLexicons& lex) {
    const std::string name = path.string();
    lex.emotions.clear();
    for_each_row(path, [&](std::size_t line_no, const std::vector<std::string_view>& cols) {
        if (cols.size() < 3) throw ParseError(name, line_no, "expected lemma<TAB>emotion<TAB>flag");
        const std::string lemma = to_lower(cols[0]);
        if (lemma.empty()) throw ParseError(name, line_no, "empty lemma");
        if (cols[2] != "0" && cols[2] != "1") {
            throw ParseError(name, line_no, "flag must be 0 or 1, got '" + std::string(cols[2]) + "'");
        }
        EmotionSet& set = lex.emotions[lemma];
        const std::string emo = to_lower(cols[1]);
        if (emo == "positive" || emo == "negative") return;
        const auto e = parse_emotion(emo);
        if (!e) throw ParseError(name, line_no, "unknown emotion '" + std::string(cols[1]) + "'");
        if (cols[2] == "1") set.set(static_cast<std::size_t>(*e));
    });
    if (lex.emotions.empty()) throw InputError(name + ": empty emotion lexicon");
}

void load_stopwords(const std::filesystem::path& path, AffectLexicons& lex) {
    lex.stopwords.clear();
    for_each_row(path, [&](std::size_t, const std::vector<std::string_view>& cols) {
        lex.stopwords.insert(to_lower(cols[0]));
    });
}

AffectLexicons load_lexicons(const std::filesystem::path& valence_path,
                             const std::filesystem::path& emotion_path,
                             const std::filesystem::path& stopword_path) {
    AffectLexicons lex;
    load_valence(valence_path, lex);
    load_emotions(emotion_path, lex);
    load_stopwords(stopword_path, lex);
    return lex;
}

FreeAssociationData load_free_associations(const std::filesystem::path& path,
                                           const std::set<std::string>& person_placeholders) {
    const std::string name = path.string();
    std::set<std::string> placeholders;
    for (const auto& p : person_placeholders) placeholders.insert(to_lower(p));

    FreeAssociationData fa;
    std::size_t rows = 0;
    for_each_row(path, [&](std::size_t line_no, const std::vector<std::string_view>& cols) {
        if (cols.size() < 2 || cols[0].empty() || cols[1].empty()) {
            throw ParseError(name, line_no, "expected cue<TAB>response[<TAB>count]");
        }
        ++rows;
        Association a{normalize_lemma(cols[0], placeholders), normalize_lemma(cols[1], placeholders), 1};
        if (cols.size() >= 3 && !cols[2].empty()) {
            auto [p, ec] = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), a.count);
            if (ec != std::errc() || p != cols[2].data() + cols[2].size() || a.count == 0) {
                throw ParseError(name, line_no, "count must be a positive integer");
            }
        }
        if (a.cue == a.response) {
            ++fa.dropped_self_pairs;
            return;
        }
        fa.pairs.push_back(std::move(a));
    });
    if (rows == 0) throw InputError(name + ": empty free-association file");
    return fa;
}

}  // namespace cognet
