#pragma once

// Randomization baselines: connected degree-preserving rewiring, valence
// label shuffling, and the soft (canonical) weighted configuration model.

#include <cstdint>
#include <span>
#include <vector>

#include "cognet/graph.hpp"
#include "cognet/network.hpp"
#include "cognet/signed_balance.hpp"

namespace cognet {

enum class NullKind { DegreeRewire, LabelShuffle, SoftWeightedCM };

struct NullEnsembleSpec {
    NullKind kind = NullKind::DegreeRewire;
    std::size_t n_samples = 1000;
    std::uint64_t seed = 0;
    std::size_t rewire_multiplier = 10;  // swap attempts per edge

    void validate() const;
};

// Stream tags so that different ensembles sharing a seed stay independent.
inline constexpr std::uint64_t kRewireStream = 1;
inline constexpr std::uint64_t kShuffleStream = 2;
inline constexpr std::uint64_t kSoftCmStream = 3;

// Realization `index`: rewire_multiplier * |E| double-edge swap attempts.
// Swaps producing self-loops or multi-edges are rejected, swaps only pair
// edges of the same component, and batches that disconnect a component
// are rolled back. Weights are not carried over. Needs >= 2 edges.
Graph degree_rewire_sample(const Graph& g, const NullEnsembleSpec& spec, std::size_t index);
std::vector<Graph> degree_rewire(const Graph& g, const NullEnsembleSpec& spec);

// Valences permuted uniformly; signs recomputed; topology untouched.
SignedNetwork label_shuffle_sample(const SignedNetwork& snet, const NullEnsembleSpec& spec, std::size_t index);
std::vector<SignedNetwork> label_shuffle(const SignedNetwork& snet, const NullEnsembleSpec& spec);

// Maximum-entropy ensemble with geometric weights:
//   P(w_ij = k) = (1 - x_i x_j) (x_i x_j)^k,   E[w_ij] = x_i x_j / (1 - x_i x_j).
struct FittedSoftCM {
    std::vector<double> x;                   // per node, 0 < x_i x_j < 1
    std::vector<double> target;              // strengths the fit reproduces
    std::vector<std::vector<NodeId>> groups; // nodes sharing one multiplier
    double residual = 0;                     // max |expected - target| strength
    std::size_t iterations = 0;

    std::size_t node_count() const { return x.size(); }
    double expected_weight(NodeId i, NodeId j) const;
    double edge_probability(NodeId i, NodeId j) const { return x[i] * x[j]; }
    std::vector<double> expected_strengths() const;
    double expected_edge_count() const;
};

struct SoftCMOptions {
    double tolerance = 1e-8;
    std::size_t max_iters = 500;
};

// Throws InputError for non-positive strengths and AnalysisError (carrying
// the residual) when the solver does not reach the tolerance.
FittedSoftCM fit_soft_weighted_cm(std::span<const double> strengths, const SoftCMOptions& options = {});
FittedSoftCM fit_soft_weighted_cm(const LexicalNetwork& net, const SoftCMOptions& options = {});

struct WeightedGraph {
    Graph graph;
    std::vector<std::uint64_t> weights;

    std::vector<double> strengths() const;
};

WeightedGraph sample_soft_cm_one(const FittedSoftCM& fit, const NullEnsembleSpec& spec, std::size_t index);
std::vector<WeightedGraph> sample_soft_cm(const FittedSoftCM& fit, const NullEnsembleSpec& spec);

}  // namespace cognet
