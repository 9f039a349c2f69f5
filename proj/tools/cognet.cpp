// cognet: build lexical networks from a parsed corpus and analyse their
// emotional and structural properties.
//
//   cognet build     --corpus c.conllu --valence v.tsv --emotions e.tsv --stopwords s.txt [--fa fa.tsv] --out dir
//   cognet balance   --valence v.tsv --out dir
//   cognet structure --valence v.tsv --stopwords s.txt --out dir
//   cognet profile   --emotions e.tsv --stopwords s.txt --out dir
//   cognet all       (every step in order; takes the build flags)
//
// Exit status: 0 success, 1 analysis error, 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "cognet/error.hpp"
#include "cognet/pipeline.hpp"

namespace {

using cognet::RunConfig;

struct Needs {
    bool corpus = false, valence = false, emotions = false, stopwords = false;
};

void add_options(CLI::App* cmd, RunConfig& c, const Needs& needs) {
    auto file = [&](const char* flag, std::filesystem::path& target, bool required, const char* help) {
        auto* opt = cmd->add_option(flag, target, help)->check(CLI::ExistingFile);
        if (required) opt->required();
    };
    if (needs.corpus) {
        file("--corpus", c.corpus, true, "CoNLL-U corpus");
        file("--fa", c.fa, false, "free-association pairs (cue, response[, count])");
        cmd->add_option("--min-weight", c.min_weight, "SVO edge weight threshold")->check(CLI::PositiveNumber);
        cmd->add_flag("--one-doc-per-file", c.one_doc_per_file, "treat the corpus file as one document");
        cmd->add_option("--placeholders", c.placeholders, "lemmas folded into s/he")->delimiter(',');
    }
    if (needs.valence) file("--valence", c.valence, true, "valence norms (lemma, score)");
    if (needs.emotions) file("--emotions", c.emotions, true, "emotion lexicon (lemma, emotion, flag)");
    if (needs.stopwords) file("--stopwords", c.stopwords, true, "stopword list");
    cmd->add_option("--out", c.out, "output directory")->required();
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--samples", c.samples, "null-model realizations")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", c.workers, "worker threads (0: all cores)");
    cmd->add_option("--focus", c.focus, "focus lemmas")->delimiter(',');
    file("--focus-file", c.focus_file, false, "focus lemmas, one per line");
    cmd->add_option("--chi2-focus", c.chi2_focus, "lemma for the neighbourhood valence test");
    cmd->add_option("--clusters", c.clusters, "Girvan-Newman clusters")->check(CLI::PositiveNumber);
    cmd->add_option("--hubs", c.hubs, "hubs in the shrinkage analysis");
    cmd->add_option("--top", c.top_k, "rows of each closeness ranking");
    cmd->add_option("--rank-drop", c.rank_drop_k, "lemmas in the rank-drop table");
    cmd->add_option("--rewire-multiplier", c.rewire_multiplier, "swap attempts per edge")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--covered-denominator", c.covered_denominator,
                  "emotion fractions over lexicon-covered neighbours only");
    cmd->add_flag("--corpus-universe", c.corpus_universe, "sample null frames from the corpus vocabulary");
    cmd->add_flag("--force", c.force, "recompute even when a matching report exists");
}

void report(const char* step, cognet::StepStatus s) {
    std::cerr << step << ": " << (s == cognet::StepStatus::Cached ? "up to date" : "done") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Emotional and structural analysis of lexical networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cognet::kToolVersion));

    RunConfig cfg;
    auto* build = app.add_subcommand("build", "build CO, SVO and FA networks");
    add_options(build, cfg, {true, true, true, true});
    auto* balance = app.add_subcommand("balance", "triad census and degree of balance against null models");
    add_options(balance, cfg, {false, true, false, false});
    auto* structure = app.add_subcommand("structure", "SVO communities, strength tail and shrinkage");
    add_options(structure, cfg, {false, true, false, true});
    auto* profile = app.add_subcommand("profile", "closeness rankings and emotional profiles");
    add_options(profile, cfg, {false, false, true, true});
    auto* all = app.add_subcommand("all", "run every step");
    add_options(all, cfg, {true, true, true, true});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (build->parsed() || all->parsed()) report("build", cognet::run_build(cfg));
        if (balance->parsed() || all->parsed()) report("balance", cognet::run_balance(cfg));
        if (structure->parsed() || all->parsed()) report("structure", cognet::run_structure(cfg));
        if (profile->parsed() || all->parsed()) report("profile", cognet::run_profile(cfg));
    } catch (const cognet::InputError& e) {
        std::cerr << "cognet: " << e.what() << '\n';
        return 2;
    } catch (const cognet::AnalysisError& e) {
        std::cerr << "cognet: analysis failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "cognet: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
