#include "cognet/emoprofile.hpp"

#include <algorithm>
#include <numeric>

#include "cognet/error.hpp"
#include "cognet/rng.hpp"

namespace cognet {

namespace {

constexpr std::uint64_t kProfileStream = 4;

struct Counts {
    std::array<std::size_t, kEmotionCount> per_emotion{};
    std::size_t covered = 0;
};

}  // namespace

SemanticFrame semantic_frame(const LexicalNetwork& net, const std::string& focus,
                             const std::set<std::string>& stopwords) {
    const auto id = net.find(focus);
    if (!id) throw InputError("focus lemma '" + focus + "' is not in the " + std::string(to_string(net.kind())) + " network");
    SemanticFrame f;
    f.focus = focus;
    f.source = net.kind();
    for (const Neighbor& nb : net.graph().neighbors(*id)) {
        const std::string& l = net.lemma(nb.node);
        if (l != focus && !stopwords.contains(l)) f.neighbors.push_back(l);
    }
    std::sort(f.neighbors.begin(), f.neighbors.end());
    return f;
}

EmotionProfile emotion_profile(const SemanticFrame& frame, const AffectLexicons& lex, const ProfileOptions& opts) {
    if (frame.empty()) throw AnalysisError("empty semantic frame for '" + frame.focus + "'");
    if (opts.n_samples < 100) throw InputError("emotion_profile: n_samples must be >= 100");
    if (!(opts.alpha > 0 && opts.alpha < 1)) throw InputError("emotion_profile: alpha must be in (0, 1)");

    const std::vector<std::string> universe = opts.universe ? *opts.universe : lex.emotion_vocabulary();
    const std::size_t k = frame.neighbors.size();
    if (universe.size() < k) {
        throw AnalysisError("frame of '" + frame.focus + "' has " + std::to_string(k) +
                            " lemmas but the sampling universe only " + std::to_string(universe.size()));
    }

    struct Word {
        EmotionSet emotions;
        bool covered;
    };
    auto describe = [&](const std::string& l) {
        auto it = lex.emotions.find(l);
        return it == lex.emotions.end() ? Word{{}, false} : Word{it->second, true};
    };
    auto tally = [](Counts& c, const Word& w) {
        c.covered += w.covered;
        for (std::size_t e = 0; e < kEmotionCount; ++e) c.per_emotion[e] += w.emotions[e];
    };
    auto denominator = [&](const Counts& c) { return opts.covered_denominator ? c.covered : k; };
    auto fraction = [](std::size_t num, std::size_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };

    Counts observed;
    for (const auto& l : frame.neighbors) tally(observed, describe(l));

    std::vector<Word> words;
    words.reserve(universe.size());
    for (const auto& l : universe) words.push_back(describe(l));
    std::vector<std::uint32_t> index(words.size());
    std::iota(index.begin(), index.end(), 0u);

    Rng rng = Rng::stream(opts.seed, kProfileStream, fnv1a(frame.focus));
    std::array<std::vector<double>, kEmotionCount> null;
    for (auto& v : null) v.resize(opts.n_samples);
    for (std::size_t s = 0; s < opts.n_samples; ++s) {
        rng.partial_shuffle(std::span<std::uint32_t>(index), k);
        Counts c;
        for (std::size_t i = 0; i < k; ++i) tally(c, words[index[i]]);
        const std::size_t den = denominator(c);
        for (std::size_t e = 0; e < kEmotionCount; ++e) null[e][s] = fraction(c.per_emotion[e], den);
    }

    EmotionProfile p;
    p.focus = frame.focus;
    p.source = frame.source;
    p.sample_size = k;
    p.denominator = denominator(observed);
    p.n_samples = opts.n_samples;
    p.seed = opts.seed;
    p.alpha = opts.alpha;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
        EmotionScore& sc = p.scores[e];
        sc.emotion = kEmotions[e];
        sc.count = observed.per_emotion[e];
        sc.observed = fraction(sc.count, p.denominator);
        sc.null = summarize(null[e]);
        std::sort(null[e].begin(), null[e].end());
        sc.threshold = nearest_rank(null[e], 100.0 * (1.0 - opts.alpha));
        sc.z = z_score(sc.observed, sc.null);
        sc.significant = sc.observed > sc.threshold;
    }
    return p;
}

ProfileComparison profile_comparison(const LexicalNetwork& net_a, const LexicalNetwork& net_b,
                                     const std::string& focus, const AffectLexicons& lex,
                                     const ProfileOptions& opts) {
    ProfileComparison c;
    c.a = emotion_profile(semantic_frame(net_a, focus, lex.stopwords), lex, opts);
    c.b = emotion_profile(semantic_frame(net_b, focus, lex.stopwords), lex, opts);
    for (Emotion e : kEmotions) {
        const bool sa = c.a.score(e).significant, sb = c.b.score(e).significant;
        if (sa && !sb) c.only_a.push_back(e);
        if (sb && !sa) c.only_b.push_back(e);
    }
    return c;
}

WheelRecord wheel_export(const EmotionProfile& profile) {
    WheelRecord w;
    w.focus = profile.focus;
    w.source = profile.source;
    w.alpha = profile.alpha;
    w.radius = normal_quantile(1.0 - profile.alpha);
    for (Emotion e : kWheelOrder) {
        const EmotionScore& s = profile.score(e);
        w.points.push_back({e, s.z, s.significant, z_score(s.threshold, s.null)});
    }
    return w;
}

}  // namespace cognet
