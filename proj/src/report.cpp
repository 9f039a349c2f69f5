#include "cognet/report.hpp"

namespace cognet {

void to_json(json& j, const Summary& s) { j = {{"mean", s.mean}, {"sd", s.sd}, {"n", s.n}}; }

void to_json(json& j, const TwoProportionResult& r) {
    j = {{"p1", r.p1}, {"p2", r.p2}, {"n1", r.n1}, {"n2", r.n2}, {"chi2", r.chi2}, {"p_value", r.p_value}};
}

void to_json(json& j, const TriadCensus& c) {
    j = {{"ppp", c.ppp}, {"ppn", c.ppn}, {"pnn", c.pnn}, {"nnn", c.nnn}, {"excluded", c.excluded},
         {"classified", c.classified()}, {"degree_of_balance", optional_json(c.degree_of_balance())}};
}

void to_json(json& j, const TriadFractions& f) {
    j = {{"ppp", f.ppp}, {"ppn", f.ppn}, {"pnn", f.pnn}, {"nnn", f.nnn}};
}

void to_json(json& j, const SignCounts& c) {
    j = {{"positive", c.positive}, {"negative", c.negative}, {"zero", c.zero}};
}

void to_json(json& j, const EnsembleBalance& e) {
    j = {{"model", e.model},
         {"samples", e.samples},
         {"samples_without_triads", e.samples_without_triads},
         {"ppp", e.ppp},
         {"ppn", e.ppn},
         {"pnn", e.pnn},
         {"nnn", e.nnn},
         {"degree_of_balance", e.dob},
         {"degree_of_balance_z", optional_json(e.dob_z)}};
}

void to_json(json& j, const BalanceReport& r) {
    j = {{"empirical", r.empirical},
         {"empirical_fractions", optional_json(r.empirical_fractions)},
         {"sign_counts", r.sign_counts},
         {"degree_rewire", r.degree_rewire},
         {"label_shuffle", r.label_shuffle},
         {"rewire_multiplier", r.options.rewire_multiplier}};
}

void to_json(json& j, const RankedLemma& r) { j = {{"lemma", r.lemma}, {"score", r.score}, {"rank", r.rank}}; }

void to_json(json& j, const RankDropEntry& e) {
    if (e.missing) {
        j = {{"lemma", e.lemma}, {"missing", true}};
        return;
    }
    j = {{"lemma", e.lemma},
         {"missing", false},
         {"empirical_rank", e.empirical_rank},
         {"empirical_closeness", e.empirical_closeness},
         {"null_rank", e.null_rank},
         {"null_closeness", e.null_closeness},
         {"drop", e.drop},
         {"p_value", e.p_value},
         {"significant", e.significant},
         {"closeness_z", optional_json(e.closeness_z)}};
}

void to_json(json& j, const PowerLawFit& f) {
    j = {{"alpha", f.alpha}, {"x_min", f.x_min}, {"n_tail", f.n_tail}, {"ks_distance", f.ks_distance}};
}

void to_json(json& j, const ShrinkageEntry& e) {
    if (e.missing) {
        j = {{"lemma", e.lemma}, {"missing", true}};
        return;
    }
    j = {{"lemma", e.lemma},
         {"missing", false},
         {"in_giant", e.in_giant},
         {"shrinkage", e.shrinkage},
         {"null", e.null},
         {"centile_low", e.centile_low},
         {"centile_high", e.centile_high},
         {"p_lower", e.p_lower},
         {"p_upper", e.p_upper}};
}

void to_json(json& j, const ShrinkageResult& r) {
    j = {{"giant_size", r.giant_size},
         {"null_samples", r.null_samples},
         {"low_percent", r.low_percent},
         {"high_percent", r.high_percent},
         {"entries", r.entries}};
}

void to_json(json& j, const ClusterSummary& c) {
    j = {{"size", c.lemmas.size()},
         {"lemmas", c.lemmas},
         {"positive_fraction", c.positive_fraction},
         {"negative_fraction", c.negative_fraction},
         {"degeneracy", optional_json(c.degeneracy)}};
}

void to_json(json& j, const GiantComponentStats& s) {
    j = {{"nodes", s.nodes}, {"node_fraction", s.node_fraction}, {"strength_fraction", s.strength_fraction}};
}

void to_json(json& j, const SemanticFrame& f) {
    j = {{"focus", f.focus}, {"source", to_string(f.source)}, {"neighbors", f.neighbors}};
}

void to_json(json& j, const EmotionScore& s) {
    j = {{"emotion", to_string(s.emotion)},
         {"count", s.count},
         {"observed", s.observed},
         {"null", s.null},
         {"threshold", s.threshold},
         {"z", optional_json(s.z)},
         {"significant", s.significant}};
}

void to_json(json& j, const EmotionProfile& p) {
    json scores = json::array();
    for (const auto& s : p.scores) scores.push_back(s);
    j = {{"focus", p.focus},
         {"source", to_string(p.source)},
         {"sample_size", p.sample_size},
         {"denominator", p.denominator},
         {"n_samples", p.n_samples},
         {"seed", p.seed},
         {"alpha", p.alpha},
         {"emotions", scores}};
}

void to_json(json& j, const WheelRecord& w) {
    json points = json::array();
    for (const auto& p : w.points) {
        points.push_back({{"emotion", to_string(p.emotion)},
                          {"z", optional_json(p.z)},
                          {"significant", p.significant},
                          {"threshold_z", optional_json(p.threshold_z)}});
    }
    j = {{"focus", w.focus}, {"source", to_string(w.source)}, {"alpha", w.alpha}, {"radius", w.radius},
         {"points", points}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cognet
