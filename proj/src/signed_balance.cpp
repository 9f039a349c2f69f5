#include "cognet/signed_balance.hpp"

#include <algorithm>
#include <numeric>

#include "cognet/error.hpp"
#include "cognet/null_models.hpp"
#include "cognet/parallel.hpp"

namespace cognet {

Sign edge_sign(Valence a, Valence b) {
    if (a == Valence::Negative || b == Valence::Negative) return Sign::Negative;
    if (a == Valence::Positive || b == Valence::Positive) return Sign::Positive;
    return Sign::Zero;
}

SignedNetwork::SignedNetwork(Graph topology, std::vector<Valence> valence)
    : graph_(std::move(topology)), valence_(std::move(valence)) {
    if (valence_.size() != graph_.node_count()) throw InputError("SignedNetwork: one valence per node required");
    sign_.reserve(graph_.edge_count());
    for (const Edge& e : graph_.edges()) sign_.push_back(edge_sign(valence_[e.u], valence_[e.v]));
}

SignedNetwork SignedNetwork::with_signs(Graph topology, std::vector<Valence> valence, std::vector<Sign> signs) {
    SignedNetwork s(std::move(topology), std::move(valence));
    if (signs.size() != s.graph_.edge_count()) throw InputError("SignedNetwork: one sign per edge required");
    s.sign_ = std::move(signs);
    return s;
}

SignCounts SignedNetwork::sign_counts() const {
    SignCounts c;
    for (Sign s : sign_) {
        if (s == Sign::Positive) ++c.positive;
        else if (s == Sign::Negative) ++c.negative;
        else ++c.zero;
    }
    return c;
}

bool SignedNetwork::signs_follow_valences() const {
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
        const Edge& ed = graph_.edge(e);
        if (sign_[e] != edge_sign(valence_[ed.u], valence_[ed.v])) return false;
    }
    return true;
}

SignedNetwork assign_signs(const LexicalNetwork& net, const AffectLexicons& lex) {
    std::vector<Valence> val(net.node_count());
    for (NodeId v = 0; v < val.size(); ++v) val[v] = lex.valence_of(net.lemma(v));
    return SignedNetwork(net.graph(), std::move(val));
}

std::optional<double> TriadCensus::degree_of_balance() const {
    const auto total = classified();
    if (total == 0) return std::nullopt;
    return static_cast<double>(ppp + pnn) / static_cast<double>(total);
}

namespace {

// Visits every triangle once as (e_uv, e_vw, e_uw). Edges are oriented from
// lower to higher (degree, id) rank, so each node only scans neighbors that
// outrank it.
template <typename Fn>
void for_each_triangle(const Graph& g, Fn&& fn) {
    const std::size_t n = g.node_count();
    auto outranks = [&](NodeId a, NodeId b) {
        const auto da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a > b;
    };
    std::vector<std::vector<Neighbor>> out(n);
    for (NodeId v = 0; v < n; ++v) {
        for (const Neighbor& nb : g.neighbors(v)) {
            if (outranks(nb.node, v)) out[v].push_back(nb);
        }
    }
    constexpr EdgeId none = UINT32_MAX;
    std::vector<EdgeId> mark(n, none);
    for (NodeId u = 0; u < n; ++u) {
        for (const Neighbor& w : out[u]) mark[w.node] = w.edge;
        for (const Neighbor& v : out[u]) {
            for (const Neighbor& w : out[v.node]) {
                if (mark[w.node] != none) fn(v.edge, w.edge, mark[w.node]);
            }
        }
        for (const Neighbor& w : out[u]) mark[w.node] = none;
    }
}

}  // namespace

TriadCensus triad_census(const Graph& g, std::span<const Sign> signs) {
    if (signs.size() != g.edge_count()) throw InputError("triad_census: one sign per edge required");
    TriadCensus c;
    for_each_triangle(g, [&](EdgeId a, EdgeId b, EdgeId d) {
        const Sign s[3] = {signs[a], signs[b], signs[d]};
        int negatives = 0;
        for (Sign x : s) {
            if (x == Sign::Zero) {
                ++c.excluded;
                return;
            }
            negatives += x == Sign::Negative;
        }
        switch (negatives) {
            case 0: ++c.ppp; break;
            case 1: ++c.ppn; break;
            case 2: ++c.pnn; break;
            default: ++c.nnn; break;
        }
    });
    return c;
}

TriadCensus triad_census(const SignedNetwork& snet) { return triad_census(snet.graph(), snet.signs()); }

std::uint64_t triangle_count(const Graph& g) {
    std::uint64_t n = 0;
    for_each_triangle(g, [&](EdgeId, EdgeId, EdgeId) { ++n; });
    return n;
}

bool structural_impossibility_check(const SignedNetwork& snet) { return triad_census(snet).ppn == 0; }

std::optional<TriadFractions> triad_fractions(const TriadCensus& c) {
    const auto total = static_cast<double>(c.classified());
    if (total == 0) return std::nullopt;
    return TriadFractions{c.ppp / total, c.ppn / total, c.pnn / total, c.nnn / total};
}

namespace {

EnsembleBalance summarize_ensemble(std::string model, std::vector<TriadCensus> censuses,
                                   std::optional<double> empirical_dob, bool keep) {
    EnsembleBalance e;
    e.model = std::move(model);
    e.samples = censuses.size();
    std::vector<double> ppp, ppn, pnn, nnn, dob;
    for (const TriadCensus& c : censuses) {
        const auto f = triad_fractions(c);
        if (!f) {
            ++e.samples_without_triads;
            continue;
        }
        ppp.push_back(f->ppp);
        ppn.push_back(f->ppn);
        pnn.push_back(f->pnn);
        nnn.push_back(f->nnn);
        dob.push_back(*c.degree_of_balance());
    }
    e.ppp = summarize(ppp);
    e.ppn = summarize(ppn);
    e.pnn = summarize(pnn);
    e.nnn = summarize(nnn);
    e.dob = summarize(dob);
    if (empirical_dob && !dob.empty()) e.dob_z = z_score(*empirical_dob, e.dob);
    if (keep) e.realizations = std::move(censuses);
    return e;
}

}  // namespace

BalanceReport balance_comparison(const SignedNetwork& snet, const BalanceOptions& options) {
    if (options.n_samples < 1) throw InputError("balance_comparison: n_samples must be >= 1");
    BalanceReport r;
    r.options = options;
    r.empirical = triad_census(snet);
    r.empirical_fractions = triad_fractions(r.empirical);
    r.sign_counts = snet.sign_counts();
    const auto dob = r.empirical.degree_of_balance();

    NullEnsembleSpec rewire{NullKind::DegreeRewire, options.n_samples, options.seed, options.rewire_multiplier};
    NullEnsembleSpec shuffle{NullKind::LabelShuffle, options.n_samples, options.seed, options.rewire_multiplier};
    rewire.validate();

    std::vector<TriadCensus> rewired(options.n_samples), shuffled(options.n_samples);
    const std::vector<Valence> valences(snet.valences().begin(), snet.valences().end());
    parallel_for(options.n_samples, [&](std::size_t i) {
        const SignedNetwork sample(degree_rewire_sample(snet.graph(), rewire, i), valences);
        rewired[i] = triad_census(sample);
        shuffled[i] = triad_census(label_shuffle_sample(snet, shuffle, i));
    });
    r.degree_rewire = summarize_ensemble("degree_rewire", std::move(rewired), dob, options.keep_realizations);
    r.label_shuffle = summarize_ensemble("label_shuffle", std::move(shuffled), dob, options.keep_realizations);
    return r;
}

}  // namespace cognet
