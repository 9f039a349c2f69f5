#pragma once

// Valence-signed networks, triad census and degree of balance.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cognet/graph.hpp"
#include "cognet/lexicon.hpp"
#include "cognet/network.hpp"
#include "cognet/stats.hpp"

namespace cognet {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

// 0 if both neutral, -1 if either is negative, +1 otherwise.
Sign edge_sign(Valence a, Valence b);

struct SignCounts {
    std::size_t positive = 0, negative = 0, zero = 0;
};

class SignedNetwork {
public:
    SignedNetwork() = default;
    // Signs derived from node valences.
    SignedNetwork(Graph topology, std::vector<Valence> valence);
    // Arbitrary signs; used to build networks the valence rule cannot produce.
    static SignedNetwork with_signs(Graph topology, std::vector<Valence> valence, std::vector<Sign> signs);

    const Graph& graph() const noexcept { return graph_; }
    std::span<const Valence> valences() const noexcept { return valence_; }
    std::span<const Sign> signs() const noexcept { return sign_; }
    SignCounts sign_counts() const;
    // True when every edge sign equals edge_sign of its endpoint valences.
    bool signs_follow_valences() const;

private:
    Graph graph_;
    std::vector<Valence> valence_;
    std::vector<Sign> sign_;
};

// Lemmas missing from the valence lexicon count as Neutral.
SignedNetwork assign_signs(const LexicalNetwork& net, const AffectLexicons& lex);

struct TriadCensus {
    std::uint64_t ppp = 0;  // {+,+,+}
    std::uint64_t ppn = 0;  // {+,+,-}
    std::uint64_t pnn = 0;  // {+,-,-}
    std::uint64_t nnn = 0;  // {-,-,-}
    std::uint64_t excluded = 0;  // triangles with at least one 0-signed edge

    std::uint64_t classified() const { return ppp + ppn + pnn + nnn; }
    // (ppp + pnn) / classified; nullopt without classified triangles.
    std::optional<double> degree_of_balance() const;

    friend bool operator==(const TriadCensus&, const TriadCensus&) = default;
};

TriadCensus triad_census(const Graph& g, std::span<const Sign> signs);
TriadCensus triad_census(const SignedNetwork& snet);

// Plain triangle count (every triangle, whatever its signs).
std::uint64_t triangle_count(const Graph& g);

// Self-test for valence-derived signs: {+,+,-} must never occur.
bool structural_impossibility_check(const SignedNetwork& snet);

struct BalanceOptions {
    std::size_t n_samples = 1000;
    std::uint64_t seed = 0;
    std::size_t rewire_multiplier = 10;
    bool keep_realizations = true;
};

struct TriadFractions {
    double ppp = 0, ppn = 0, pnn = 0, nnn = 0;
};

struct EnsembleBalance {
    std::string model;  // "degree_rewire" or "label_shuffle"
    std::size_t samples = 0;
    std::size_t samples_without_triads = 0;  // realizations with no classified triangle
    Summary ppp, ppn, pnn, nnn, dob;         // fraction summaries over realizations with triads
    std::optional<double> dob_z;             // empirical DoB vs this ensemble
    std::vector<TriadCensus> realizations;
};

struct BalanceReport {
    TriadCensus empirical;
    std::optional<TriadFractions> empirical_fractions;
    SignCounts sign_counts;
    EnsembleBalance degree_rewire;
    EnsembleBalance label_shuffle;
    BalanceOptions options;
};

std::optional<TriadFractions> triad_fractions(const TriadCensus& c);

BalanceReport balance_comparison(const SignedNetwork& snet, const BalanceOptions& options);

}  // namespace cognet
