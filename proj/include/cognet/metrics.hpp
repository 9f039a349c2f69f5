#pragma once

// Structural metrics over lexical networks.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cognet/graph.hpp"
#include "cognet/lexicon.hpp"
#include "cognet/network.hpp"
#include "cognet/stats.hpp"

namespace cognet {

// ------------------------------------------------------------- closeness

// (reachable - 1) / sum of hop distances to reachable nodes; 0 for isolates.
std::vector<double> closeness(const Graph& g);

struct RankedLemma {
    std::string lemma;
    double score = 0;
    std::size_t rank = 0;  // 1-based, consecutive
};

struct CentralityRanking {
    std::vector<RankedLemma> entries;  // score non-increasing; ties by lemma
    bool content_words_only = false;

    std::optional<std::size_t> rank_of(const std::string& lemma) const;
};

// Scores computed on the full graph; stopwords are removed from the ranking
// afterwards (no filter when `stopwords` is empty).
CentralityRanking rank_by_score(std::span<const std::string> lemmas, std::span<const double> scores,
                                const std::set<std::string>& stopwords);
CentralityRanking closeness_ranking(const LexicalNetwork& net, const std::set<std::string>& stopwords);

struct RankDropEntry {
    std::string lemma;
    bool missing = false;  // not a ranked node of the network
    std::size_t empirical_rank = 0;
    double empirical_closeness = 0;
    Summary null_rank;
    Summary null_closeness;
    double drop = 0;  // mean null rank - empirical rank
    double p_value = 1;  // two-sided, empirical rank vs null ranks
    bool significant = false;
    std::optional<double> closeness_z;
};

// Ensemble graphs must share the node set of `net`.
std::vector<RankDropEntry> rank_drop(const LexicalNetwork& net, const GraphEnsemble& ensemble,
                                     const std::vector<std::string>& targets,
                                     const std::set<std::string>& stopwords, double alpha = 0.05);

// ------------------------------------------------------------ degeneracy

// Entropy (bits) of the column means of the row-normalized adjacency of an
// N-node star; the minimum the normalization refers to.
double star_entropy(std::size_t n);

// (log2 N - H(<W>)) / (log2 N - S_star). Needs N >= 3 and no isolated node.
double degeneracy(const Graph& g, std::span<const std::uint64_t> weights);
double degeneracy(const LexicalNetwork& net, const std::optional<std::vector<NodeId>>& subgraph = std::nullopt);

// ------------------------------------------------------- strength tails

struct CcdfPoint {
    double x = 0;
    double p = 0;  // fraction of values >= x
};

std::vector<CcdfPoint> ccdf(std::span<const double> values);

struct PowerLawFit {
    double alpha = 0;  // density exponent, p(x) ~ x^-alpha
    double x_min = 0;
    std::size_t n_tail = 0;
    double ks_distance = 0;
};

// Continuous maximum likelihood above x_min, with x_min chosen among the
// observed values by minimum Kolmogorov-Smirnov distance. nullopt when no
// candidate leaves min_tail values with any spread.
std::optional<PowerLawFit> fit_power_law_tail(std::span<const double> values, std::size_t min_tail = 10);

struct StrengthDistribution {
    std::vector<double> strengths;  // per node id
    std::vector<CcdfPoint> ccdf;
    std::optional<PowerLawFit> tail;  // nullopt: exponent undefined
};

// Needs >= 10 nodes.
StrengthDistribution strength_distribution(const LexicalNetwork& net, std::size_t min_tail = 10);

// -------------------------------------------------------------- shrinkage

// Nodes lost by the giant component when v is deleted (v included):
// |GC| minus the largest piece of GC without v. 0 if v is outside the GC.
std::size_t shrinkage(const Graph& g, NodeId v);

struct ShrinkageEntry {
    std::string lemma;
    bool missing = false;
    bool in_giant = false;
    std::size_t shrinkage = 0;
    Summary null;
    double centile_low = 0, centile_high = 0;
    double p_lower = 1;  // P(null <= observed), add-one
    double p_upper = 1;  // P(null >= observed), add-one
};

struct ShrinkageResult {
    std::size_t giant_size = 0;
    std::size_t null_samples = 0;
    double low_percent = 1, high_percent = 99;
    std::vector<ShrinkageEntry> entries;
};

ShrinkageResult shrinkage_analysis(const LexicalNetwork& net, const GraphEnsemble& ensemble,
                                   const std::vector<std::string>& targets, double low_percent = 1,
                                   double high_percent = 99);

// ------------------------------------------------------------ communities

struct Partition {
    std::vector<std::uint32_t> cluster_of;  // per node; 0 is the largest cluster
    std::size_t cluster_count = 0;
    std::vector<Edge> removed;  // in removal order
};

// Exact Girvan-Newman on unweighted edge betweenness: removes the edge of
// highest betweenness (ties: smallest endpoint pair) until the graph has
// n_clusters components. Clusters are numbered by size, then smallest id.
Partition girvan_newman(const Graph& g, std::size_t n_clusters);

// Unnormalized edge betweenness (each pair counted from both ends).
std::vector<double> edge_betweenness(const Graph& g);

struct ClusterSummary {
    std::vector<std::string> lemmas;
    double positive_fraction = 0;
    double negative_fraction = 0;
    std::optional<double> degeneracy;  // undefined below 3 nodes
};

struct CommunityReport {
    Partition partition;
    std::vector<ClusterSummary> clusters;
};

CommunityReport girvan_newman_clusters(const LexicalNetwork& net, std::size_t n_clusters, const AffectLexicons& lex);

// ------------------------------------------------------- giant component

struct GiantComponentStats {
    std::size_t nodes = 0;
    double node_fraction = 0;
    double strength_fraction = 0;
};

GiantComponentStats giant_component_stats(const LexicalNetwork& net);

}  // namespace cognet
