#include "cognet/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cognet/corpus.hpp"
#include "cognet/emoprofile.hpp"
#include "cognet/error.hpp"
#include "cognet/lexicon.hpp"
#include "cognet/metrics.hpp"
#include "cognet/netbuild.hpp"
#include "cognet/network.hpp"
#include "cognet/null_models.hpp"
#include "cognet/parallel.hpp"
#include "cognet/report.hpp"
#include "cognet/rng.hpp"
#include "cognet/signed_balance.hpp"
#include "cognet/stats.hpp"

namespace cognet {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kCo = "co.tsv";
constexpr std::string_view kSvo = "svo.tsv";
constexpr std::string_view kFa = "fa.tsv";

std::string hex64(std::uint64_t h) {
    std::string s(16, '0');
    static constexpr char digits[] = "0123456789abcdef";
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return s;
}

std::string read_file(const fs::path& path, std::string_view role) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(std::string(role) + ": cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest(const fs::path& path, std::string_view role) { return hex64(fnv1a(read_file(path, role))); }

void require_path(const fs::path& p, std::string_view flag) {
    if (p.empty()) throw InputError(std::string(flag) + " is required");
    if (!fs::is_regular_file(p)) throw InputError(std::string(flag) + ": no such file '" + p.string() + "'");
}

fs::path stored(const RunConfig& c, std::string_view name) { return c.out / name; }

void require_stored(const RunConfig& c, std::string_view name) {
    if (!fs::is_regular_file(stored(c, name))) {
        throw InputError("'" + stored(c, name).string() + "' not found; run the build step first");
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("error writing '" + path.string() + "'");
}

std::string num(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::set<std::string> lower_set(const std::vector<std::string>& v) {
    std::set<std::string> s;
    for (const auto& x : v) s.insert(to_lower(x));
    return s;
}

json report_header(const std::string& step, const RunConfig& c, const json& cfg) {
    return {{"tool", "cognet"},
            {"version", kToolVersion},
            {"schema", kReportSchema},
            {"step", step},
            {"seed", c.seed},
            {"samples", c.samples},
            {"config", cfg},
            {"config_hash", config_hash(cfg)}};
}

// True when `report` exists and was produced by the same configuration.
bool up_to_date(const fs::path& report, const json& cfg, bool force) {
    if (force || !fs::is_regular_file(report)) return false;
    try {
        std::ifstream in(report);
        const json j = json::parse(in);
        return j.value("config_hash", "") == config_hash(cfg) && j.value("version", "") == kToolVersion;
    } catch (const json::exception&) {
        return false;
    }
}

AffectLexicons load_parts(const RunConfig& c, bool valence, bool emotions, bool stopwords) {
    AffectLexicons lex;
    if (valence) load_valence(c.valence, lex);
    if (emotions) load_emotions(c.emotions, lex);
    if (stopwords) load_stopwords(c.stopwords, lex);
    return lex;
}

std::optional<LexicalNetwork> load_optional(const RunConfig& c, std::string_view name) {
    if (!fs::is_regular_file(stored(c, name))) return std::nullopt;
    return load_network(stored(c, name));
}

std::uint64_t total_weight(const LexicalNetwork& net) {
    std::uint64_t w = 0;
    for (auto x : net.weights()) w += x;
    return w;
}

json network_summary(const LexicalNetwork& net) {
    return {{"kind", to_string(net.kind())},
            {"nodes", net.node_count()},
            {"edges", net.edge_count()},
            {"total_weight", total_weight(net)},
            {"giant_component", giant_component_stats(net)}};
}

std::vector<std::string> read_focus_file(const fs::path& p) {
    std::istringstream in(read_file(p, "--focus-file"));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

std::vector<std::string> focus_lemmas(const RunConfig& c) {
    std::vector<std::string> all = c.focus;
    if (!c.focus_file.empty()) {
        auto extra = read_focus_file(c.focus_file);
        all.insert(all.end(), extra.begin(), extra.end());
    }
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& f : all) {
        std::string l = to_lower(f);
        if (!l.empty() && seen.insert(l).second) out.push_back(std::move(l));
    }
    return out;
}

std::string config_hash(const json& cfg) { return hex64(fnv1a(cfg.dump())); }

json step_config(const std::string& step, const RunConfig& c) {
    json cfg = {{"step", step}, {"seed", c.seed}, {"samples", c.samples}};
    json inputs = json::object();
    if (step == "build") {
        require_path(c.corpus, "--corpus");
        require_path(c.valence, "--valence");
        require_path(c.emotions, "--emotions");
        require_path(c.stopwords, "--stopwords");
        inputs["corpus"] = digest(c.corpus, "--corpus");
        inputs["valence"] = digest(c.valence, "--valence");
        inputs["emotions"] = digest(c.emotions, "--emotions");
        inputs["stopwords"] = digest(c.stopwords, "--stopwords");
        if (!c.fa.empty()) {
            require_path(c.fa, "--fa");
            inputs["fa"] = digest(c.fa, "--fa");
        }
        cfg["min_weight"] = c.min_weight;
        cfg["one_doc_per_file"] = c.one_doc_per_file;
        cfg["placeholders"] = lower_set(c.placeholders);
    } else if (step == "balance") {
        require_path(c.valence, "--valence");
        require_stored(c, kCo);
        inputs["valence"] = digest(c.valence, "--valence");
        inputs["co"] = digest(stored(c, kCo), "co network");
        if (fs::is_regular_file(stored(c, kFa))) inputs["fa"] = digest(stored(c, kFa), "fa network");
        cfg["rewire_multiplier"] = c.rewire_multiplier;
    } else if (step == "structure") {
        require_path(c.valence, "--valence");
        require_path(c.stopwords, "--stopwords");
        require_stored(c, kSvo);
        inputs["valence"] = digest(c.valence, "--valence");
        inputs["stopwords"] = digest(c.stopwords, "--stopwords");
        inputs["svo"] = digest(stored(c, kSvo), "svo network");
        cfg["clusters"] = c.clusters;
        cfg["hubs"] = c.hubs;
        cfg["chi2_focus"] = to_lower(c.chi2_focus);
        cfg["focus"] = focus_lemmas(c);
    } else if (step == "profile") {
        require_path(c.emotions, "--emotions");
        require_path(c.stopwords, "--stopwords");
        require_stored(c, kCo);
        inputs["emotions"] = digest(c.emotions, "--emotions");
        inputs["stopwords"] = digest(c.stopwords, "--stopwords");
        inputs["co"] = digest(stored(c, kCo), "co network");
        if (fs::is_regular_file(stored(c, kFa))) inputs["fa"] = digest(stored(c, kFa), "fa network");
        cfg["focus"] = focus_lemmas(c);
        cfg["top_k"] = c.top_k;
        cfg["rank_drop_k"] = c.rank_drop_k;
        cfg["rewire_multiplier"] = c.rewire_multiplier;
        cfg["covered_denominator"] = c.covered_denominator;
        cfg["corpus_universe"] = c.corpus_universe;
    } else {
        throw InputError("unknown step '" + step + "'");
    }
    cfg["inputs"] = inputs;
    return cfg;
}

// ================================================================ build

StepStatus run_build(const RunConfig& c) {
    set_worker_count(c.workers);
    if (c.out.empty()) throw InputError("--out is required");
    const json cfg = step_config("build", c);
    const fs::path report_path = c.out / "build.json";
    if (up_to_date(report_path, cfg, c.force) && fs::is_regular_file(stored(c, kCo)) &&
        fs::is_regular_file(stored(c, kSvo))) {
        return StepStatus::Cached;
    }
    fs::create_directories(c.out);

    const AffectLexicons lex = load_lexicons(c.valence, c.emotions, c.stopwords);
    const std::set<std::string> placeholders = lower_set(c.placeholders);
    ConlluOptions copts;
    copts.one_doc_per_file = c.one_doc_per_file;
    const AnnotatedCorpus corpus = normalize_lemmas(read_conllu(c.corpus, copts), placeholders);

    const TagConfig tags;
    const LexicalNetwork co = build_co_network(corpus, tags);
    const SvoExtraction svo_ex = extract_svo_triplets(corpus, tags);
    const LexicalNetwork svo = build_svo_network(svo_ex.triplets, c.min_weight);
    save_network(stored(c, kCo), co);
    save_network(stored(c, kSvo), svo);

    std::ostringstream trip;
    trip << "subject\tverb\tobject\tdocument\tsentence\n";
    for (const auto& t : svo_ex.triplets) {
        trip << t.subject << '\t' << t.verb << '\t' << t.object << '\t' << t.document << '\t' << t.sentence << '\n';
    }
    write_text(c.out / "svo_triplets.tsv", trip.str());

    json report = report_header("build", c, cfg);
    json results;

    std::vector<double> words_per_doc;
    std::set<std::string> vocab;
    for (const auto& d : corpus.documents) {
        std::size_t words = 0;
        for (const auto& s : d.sentences) {
            for (const auto& t : s.tokens) {
                if (tags.punctuation_upos.contains(t.upos)) continue;
                ++words;
                vocab.insert(t.lemma);
            }
        }
        words_per_doc.push_back(static_cast<double>(words));
    }
    std::size_t content_vocab = 0, with_valence = 0, with_emotions = 0;
    for (const auto& l : vocab) {
        content_vocab += !lex.is_stopword(l);
        with_valence += lex.valence.contains(l);
        with_emotions += lex.emotions.contains(l);
    }
    results["corpus"] = {{"documents", corpus.documents.size()},
                         {"sentences", corpus.sentence_count()},
                         {"tokens", corpus.token_count()},
                         {"words_per_document", summarize(words_per_doc)},
                         {"vocabulary", vocab.size()},
                         {"vocabulary_without_stopwords", content_vocab},
                         {"vocabulary_with_valence", with_valence},
                         {"vocabulary_with_emotions", with_emotions}};
    results["lexicons"] = {{"valence_entries", lex.valence.size()},
                           {"valence_q1", lex.scale.q1},
                           {"valence_q3", lex.scale.q3},
                           {"emotion_entries", lex.emotions.size()},
                           {"stopwords", lex.stopwords.size()}};
    results["svo_extraction"] = {{"triplets", svo_ex.triplets.size()},
                                 {"object_tokens", svo_ex.object_tokens},
                                 {"skipped_no_verb", svo_ex.skipped_no_verb},
                                 {"skipped_no_subject", svo_ex.skipped_no_subject}};
    json nets = {{"CO", network_summary(co)}, {"SVO", network_summary(svo)}};

    if (!c.fa.empty()) {
        const FreeAssociationData fa_data = load_free_associations(c.fa, placeholders);
        const LexicalNetwork fa = build_fa_network(fa_data);
        save_network(stored(c, kFa), fa);
        nets["FA"] = network_summary(fa);
        results["free_associations"] = {{"pairs", fa_data.pairs.size()},
                                        {"dropped_self_pairs", fa_data.dropped_self_pairs}};
    } else {
        fs::remove(stored(c, kFa));
    }
    results["networks"] = nets;
    report["results"] = results;
    write_text(report_path, dump_report(report));
    return StepStatus::Computed;
}

// ============================================================== balance

StepStatus run_balance(const RunConfig& c) {
    set_worker_count(c.workers);
    const json cfg = step_config("balance", c);
    const fs::path report_path = c.out / "balance.json";
    if (up_to_date(report_path, cfg, c.force)) return StepStatus::Cached;

    const AffectLexicons lex = load_parts(c, true, false, false);
    std::vector<LexicalNetwork> nets;
    nets.push_back(load_network(stored(c, kCo)));
    if (auto fa = load_optional(c, kFa)) nets.push_back(std::move(*fa));

    BalanceOptions opts;
    opts.n_samples = c.samples;
    opts.seed = c.seed;
    opts.rewire_multiplier = c.rewire_multiplier;

    json report = report_header("balance", c, cfg);
    json results = json::object();
    for (const auto& net : nets) {
        const std::string kind(to_string(net.kind()));
        const SignedNetwork snet = assign_signs(net, lex);
        const BalanceReport br = balance_comparison(snet, opts);

        json r = br;
        r["nodes"] = net.node_count();
        r["edges"] = net.edge_count();
        r["triangles"] = triangle_count(snet.graph());
        r["structural_impossibility_check"] = structural_impossibility_check(snet);
        results[kind] = r;

        std::ostringstream bars;
        bars << "source,ppp,ppn,pnn,nnn,degree_of_balance\n";
        if (br.empirical_fractions) {
            const auto& f = *br.empirical_fractions;
            bars << "empirical," << num(f.ppp) << ',' << num(f.ppn) << ',' << num(f.pnn) << ',' << num(f.nnn) << ','
                 << num(br.empirical.degree_of_balance()) << '\n';
        }
        for (const EnsembleBalance* e : {&br.degree_rewire, &br.label_shuffle}) {
            bars << e->model << "_mean," << num(e->ppp.mean) << ',' << num(e->ppn.mean) << ',' << num(e->pnn.mean)
                 << ',' << num(e->nnn.mean) << ',' << num(e->dob.mean) << '\n';
            bars << e->model << "_sd," << num(e->ppp.sd) << ',' << num(e->ppn.sd) << ',' << num(e->pnn.sd) << ','
                 << num(e->nnn.sd) << ',' << num(e->dob.sd) << '\n';
        }
        write_text(c.out / ("balance_" + to_lower(kind) + "_triads.csv"), bars.str());

        std::ostringstream real;
        real << "model,index,ppp,ppn,pnn,nnn,excluded\n";
        for (const EnsembleBalance* e : {&br.degree_rewire, &br.label_shuffle}) {
            for (std::size_t i = 0; i < e->realizations.size(); ++i) {
                const TriadCensus& t = e->realizations[i];
                real << e->model << ',' << i << ',' << t.ppp << ',' << t.ppn << ',' << t.pnn << ',' << t.nnn << ','
                     << t.excluded << '\n';
            }
        }
        write_text(c.out / ("balance_" + to_lower(kind) + "_realizations.csv"), real.str());
    }
    report["results"] = results;
    write_text(report_path, dump_report(report));
    return StepStatus::Computed;
}

// ============================================================ structure

namespace {

json neighbourhood_test(const LexicalNetwork& net, const AffectLexicons& lex, const std::string& focus) {
    json out = {{"focus", focus}};
    const auto id = net.find(focus);
    if (!id) {
        out["error"] = "focus lemma not in the SVO network";
        return out;
    }
    const Graph& g = net.graph();
    std::vector<char> near(net.node_count(), 0);
    for (const Neighbor& nb : g.neighbors(*id)) near[nb.node] = 1;

    std::uint64_t n1 = 0, neg1 = 0, pos1 = 0, n2 = 0, neg2 = 0, pos2 = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (v == *id) continue;
        const Valence val = lex.valence_of(net.lemma(v));
        auto& n = near[v] ? n1 : n2;
        auto& neg = near[v] ? neg1 : neg2;
        auto& pos = near[v] ? pos1 : pos2;
        ++n;
        neg += val == Valence::Negative;
        pos += val == Valence::Positive;
    }
    out["neighbors"] = n1;
    out["rest"] = n2;
    auto test = [&](std::uint64_t k1, std::uint64_t k2) -> json {
        if (n1 == 0 || n2 == 0) return {{"error", "empty group"}};
        try {
            return chi2_two_proportions(k1, n1, k2, n2);
        } catch (const AnalysisError& e) {
            return {{"error", e.what()}};
        }
    };
    out["negative"] = test(neg1, neg2);
    out["positive"] = test(pos1, pos2);

    // Nodes that leave the giant component together with the focus.
    const Components full = connected_components(g);
    json dep = {{"nodes", 0}, {"negative", 0}, {"fraction_of_giant", 0.0}};
    if (full.count() > 0 && full.label[*id] == full.giant()) {
        const Components cut = connected_components(g, *id);
        std::uint32_t largest = 0;
        std::size_t best = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (v == *id || full.label[v] != full.giant()) continue;
            const auto l = cut.label[v];
            if (cut.size[l] > best) {
                best = cut.size[l];
                largest = l;
            }
        }
        std::vector<std::string> lemmas;
        std::size_t negative = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (v == *id || full.label[v] != full.giant() || cut.label[v] == largest) continue;
            lemmas.push_back(net.lemma(v));
            negative += lex.valence_of(net.lemma(v)) == Valence::Negative;
        }
        dep = {{"nodes", lemmas.size()},
               {"negative", negative},
               {"fraction_of_giant", static_cast<double>(lemmas.size()) / static_cast<double>(full.size[full.giant()])},
               {"negative_fraction", lemmas.empty() ? json(nullptr) : json(static_cast<double>(negative) / static_cast<double>(lemmas.size()))},
               {"lemmas", lemmas}};
    }
    out["dependent_nodes"] = dep;
    return out;
}

}  // namespace

StepStatus run_structure(const RunConfig& c) {
    set_worker_count(c.workers);
    const json cfg = step_config("structure", c);
    const fs::path report_path = c.out / "structure.json";
    if (up_to_date(report_path, cfg, c.force)) return StepStatus::Cached;

    const AffectLexicons lex = load_parts(c, true, false, true);
    const LexicalNetwork svo = load_network(stored(c, kSvo));
    if (svo.edge_count() == 0) throw AnalysisError("the SVO network has no edges");

    json report = report_header("structure", c, cfg);
    json results;
    results["network"] = network_summary(svo);

    // Communities inside the giant component.
    std::set<std::string> gc_vocab;
    for (NodeId v : giant_component_nodes(svo.graph())) gc_vocab.insert(svo.lemma(v));
    const LexicalNetwork gc = restrict_network(svo, gc_vocab);
    const std::size_t k = std::min(c.clusters, gc.node_count());
    const CommunityReport communities = girvan_newman_clusters(gc, k, lex);
    results["communities"] = {{"requested", c.clusters},
                              {"found", communities.partition.cluster_count},
                              {"removed_edges", communities.partition.removed.size()},
                              {"clusters", communities.clusters}};
    json partition = report_header("structure", c, cfg);
    json assignment = json::object();
    for (NodeId v = 0; v < gc.node_count(); ++v) assignment[gc.lemma(v)] = communities.partition.cluster_of[v];
    partition["partition"] = assignment;
    write_text(c.out / "partition.json", dump_report(partition));

    // Strength distribution.
    std::ostringstream cc;
    cc << "strength,ccdf\n";
    if (svo.node_count() >= 10) {
        const StrengthDistribution sd = strength_distribution(svo);
        for (const auto& p : sd.ccdf) cc << num(p.x) << ',' << num(p.p) << '\n';
        results["strength_tail"] = optional_json(sd.tail);
    } else {
        for (const auto& p : ccdf(svo.strengths())) cc << num(p.x) << ',' << num(p.p) << '\n';
        results["strength_tail"] = nullptr;
    }
    write_text(c.out / "strength_ccdf.csv", cc.str());

    // Hubs by strength, then the focus lemmas.
    std::vector<NodeId> order(svo.node_count());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (svo.strength(a) != svo.strength(b)) return svo.strength(a) > svo.strength(b);
        return svo.lemma(a) < svo.lemma(b);
    });
    std::vector<std::string> targets;
    json hubs = json::array();
    for (std::size_t i = 0; i < std::min(c.hubs, order.size()); ++i) {
        const NodeId v = order[i];
        targets.push_back(svo.lemma(v));
        hubs.push_back({{"lemma", svo.lemma(v)}, {"strength", svo.strength(v)}, {"degree", svo.graph().degree(v)}});
    }
    results["hubs"] = hubs;
    for (const auto& f : focus_lemmas(c)) {
        if (std::find(targets.begin(), targets.end(), f) == targets.end()) targets.push_back(f);
    }

    const FittedSoftCM fit = fit_soft_weighted_cm(svo);
    NullEnsembleSpec spec;
    spec.kind = NullKind::SoftWeightedCM;
    spec.n_samples = c.samples;
    spec.seed = c.seed;
    spec.validate();
    const GraphEnsemble ensemble(c.samples, [&](std::size_t i) { return sample_soft_cm_one(fit, spec, i).graph; });
    results["soft_cm"] = {{"iterations", fit.iterations},
                          {"residual", fit.residual},
                          {"expected_edges", fit.expected_edge_count()}};
    results["shrinkage"] = shrinkage_analysis(svo, ensemble, targets);
    results["neighbourhood_valence"] = neighbourhood_test(svo, lex, to_lower(c.chi2_focus));

    report["results"] = results;
    write_text(report_path, dump_report(report));
    return StepStatus::Computed;
}

// ============================================================== profile

StepStatus run_profile(const RunConfig& c) {
    set_worker_count(c.workers);
    const json cfg = step_config("profile", c);
    const fs::path report_path = c.out / "profile.json";
    if (up_to_date(report_path, cfg, c.force)) return StepStatus::Cached;

    const AffectLexicons lex = load_parts(c, false, true, true);
    const LexicalNetwork co = load_network(stored(c, kCo));
    const std::optional<LexicalNetwork> fa = load_optional(c, kFa);

    json report = report_header("profile", c, cfg);
    json results;

    // Closeness rankings: CO, FA and CO restricted to the FA vocabulary.
    auto top = [&](const CentralityRanking& r) {
        std::vector<RankedLemma> v(r.entries.begin(), r.entries.begin() + std::min(c.top_k, r.entries.size()));
        return v;
    };
    std::vector<std::pair<std::string, std::vector<RankedLemma>>> columns;
    const CentralityRanking co_rank = closeness_ranking(co, lex.stopwords);
    columns.emplace_back("co", top(co_rank));
    if (fa) {
        columns.emplace_back("fa", top(closeness_ranking(*fa, lex.stopwords)));
        const std::set<std::string> fa_vocab(fa->lemmas().begin(), fa->lemmas().end());
        columns.emplace_back("co_restricted", top(closeness_ranking(restrict_network(co, fa_vocab), lex.stopwords)));
    }
    json rankings = json::object();
    std::ostringstream rk;
    rk << "rank";
    std::size_t rows = 0;
    for (const auto& [name, col] : columns) {
        rankings[name] = col;
        rk << ',' << name << ',' << name << "_closeness";
        rows = std::max(rows, col.size());
    }
    rk << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        rk << i + 1;
        for (const auto& [name, col] : columns) {
            if (i < col.size()) {
                rk << ',' << csv_field(col[i].lemma) << ',' << num(col[i].score);
            } else {
                rk << ",,";
            }
        }
        rk << '\n';
    }
    write_text(c.out / "closeness_rankings.csv", rk.str());
    results["closeness_rankings"] = rankings;

    // Rank drop of the most central CO lemmas under degree-preserving rewiring.
    std::vector<std::string> drop_targets;
    for (std::size_t i = 0; i < std::min(c.rank_drop_k, co_rank.entries.size()); ++i) {
        drop_targets.push_back(co_rank.entries[i].lemma);
    }
    NullEnsembleSpec spec;
    spec.kind = NullKind::DegreeRewire;
    spec.n_samples = c.samples;
    spec.seed = c.seed;
    spec.rewire_multiplier = c.rewire_multiplier;
    spec.validate();
    const GraphEnsemble rewired(c.samples, [&](std::size_t i) { return degree_rewire_sample(co.graph(), spec, i); });
    const auto drops = rank_drop(co, rewired, drop_targets, lex.stopwords);
    results["rank_drop"] = drops;
    std::ostringstream rd;
    rd << "lemma,empirical_rank,null_rank_mean,null_rank_sd,drop,p_value,significant,closeness_z\n";
    for (const auto& e : drops) {
        rd << csv_field(e.lemma) << ',' << e.empirical_rank << ',' << num(e.null_rank.mean) << ','
           << num(e.null_rank.sd) << ',' << num(e.drop) << ',' << num(e.p_value) << ','
           << (e.significant ? "true" : "false") << ',' << num(e.closeness_z) << '\n';
    }
    write_text(c.out / "rank_drop.csv", rd.str());

    // Emotional profiles.
    ProfileOptions popts;
    popts.n_samples = c.samples;
    popts.seed = c.seed;
    popts.covered_denominator = c.covered_denominator;
    if (c.corpus_universe) {
        std::vector<std::string> u;
        for (const auto& l : co.lemmas()) {
            if (!lex.is_stopword(l)) u.push_back(l);
        }
        popts.universe = std::move(u);
    }

    const std::vector<std::string> foci = focus_lemmas(c);
    std::vector<const LexicalNetwork*> sources{&co};
    if (fa) sources.push_back(&*fa);
    std::vector<json> cells(foci.size() * sources.size());
    std::vector<std::optional<EmotionProfile>> profiles(cells.size());
    parallel_for(cells.size(), [&](std::size_t idx) {
        const LexicalNetwork& net = *sources[idx % sources.size()];
        const std::string& focus = foci[idx / sources.size()];
        json j = {{"focus", focus}, {"source", to_string(net.kind())}};
        try {
            const SemanticFrame frame = semantic_frame(net, focus, lex.stopwords);
            j["frame"] = frame;
            const EmotionProfile p = emotion_profile(frame, lex, popts);
            j["profile"] = p;
            j["wheel"] = wheel_export(p);
            profiles[idx] = p;
        } catch (const Error& e) {
            j["error"] = e.what();
        }
        cells[idx] = std::move(j);
    });

    json per_focus = json::array();
    std::ostringstream zc;
    zc << "network,focus";
    for (Emotion e : kEmotions) zc << ',' << to_string(e);
    zc << '\n';
    for (std::size_t f = 0; f < foci.size(); ++f) {
        json entry = {{"focus", foci[f]}};
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const std::size_t idx = f * sources.size() + s;
            entry[std::string(to_string(sources[s]->kind()))] = cells[idx];
            if (profiles[idx]) {
                zc << to_string(sources[s]->kind()) << ',' << csv_field(foci[f]);
                for (const auto& sc : profiles[idx]->scores) zc << ',' << num(sc.z);
                zc << '\n';
            }
        }
        if (sources.size() == 2 && profiles[f * 2] && profiles[f * 2 + 1]) {
            json only_co = json::array(), only_fa = json::array();
            for (Emotion e : kEmotions) {
                const bool a = profiles[f * 2]->score(e).significant;
                const bool b = profiles[f * 2 + 1]->score(e).significant;
                if (a && !b) only_co.push_back(to_string(e));
                if (b && !a) only_fa.push_back(to_string(e));
            }
            entry["significant_only_in"] = {{"CO", only_co}, {"FA", only_fa}};
        }
        per_focus.push_back(entry);
    }
    results["profiles"] = per_focus;
    write_text(c.out / "profile_z.csv", zc.str());

    report["results"] = results;
    write_text(report_path, dump_report(report));
    return StepStatus::Computed;
}

}  // namespace cognet
