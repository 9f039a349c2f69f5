#include "cognet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "cognet/error.hpp"
#include "cognet/parallel.hpp"

namespace cognet {

// ============================================================ closeness

namespace {

double closeness_of(const Graph& g, NodeId s) {
    const auto dist = bfs_distances(g, s);
    std::uint64_t sum = 0, reached = 0;
    for (int d : dist) {
        if (d > 0) {
            sum += static_cast<std::uint64_t>(d);
            ++reached;
        }
    }
    return sum == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(sum);
}

std::vector<double> closeness_serial(const Graph& g) {
    std::vector<double> c(g.node_count());
    for (NodeId s = 0; s < g.node_count(); ++s) c[s] = closeness_of(g, s);
    return c;
}

}  // namespace

std::vector<double> closeness(const Graph& g) {
    std::vector<double> c(g.node_count(), 0.0);
    parallel_for(g.node_count(), [&](std::size_t s) { c[s] = closeness_of(g, static_cast<NodeId>(s)); });
    return c;
}

std::optional<std::size_t> CentralityRanking::rank_of(const std::string& lemma) const {
    for (const auto& e : entries) {
        if (e.lemma == lemma) return e.rank;
    }
    return std::nullopt;
}

CentralityRanking rank_by_score(std::span<const std::string> lemmas, std::span<const double> scores,
                                const std::set<std::string>& stopwords) {
    if (lemmas.size() != scores.size()) throw InputError("rank_by_score: size mismatch");
    std::vector<std::size_t> order;
    order.reserve(lemmas.size());
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
        if (!stopwords.contains(lemmas[i])) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return lemmas[a] < lemmas[b];
    });
    CentralityRanking r;
    r.content_words_only = !stopwords.empty();
    r.entries.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) r.entries.push_back({lemmas[order[k]], scores[order[k]], k + 1});
    return r;
}

CentralityRanking closeness_ranking(const LexicalNetwork& net, const std::set<std::string>& stopwords) {
    const auto c = closeness(net.graph());
    return rank_by_score(net.lemmas(), c, stopwords);
}

namespace {

// rank (1-based) of each node after filtering; 0 for filtered nodes.
std::vector<std::size_t> filtered_ranks(std::span<const std::string> lemmas, std::span<const double> scores,
                                        const std::set<std::string>& stopwords) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
        if (!stopwords.contains(lemmas[i])) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return lemmas[a] < lemmas[b];
    });
    std::vector<std::size_t> rank(lemmas.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k + 1;
    return rank;
}

}  // namespace

std::vector<RankDropEntry> rank_drop(const LexicalNetwork& net, const GraphEnsemble& ensemble,
                                     const std::vector<std::string>& targets,
                                     const std::set<std::string>& stopwords, double alpha) {
    if (ensemble.size() == 0) throw InputError("rank_drop: empty ensemble");
    const auto emp_scores = closeness(net.graph());
    const auto emp_rank = filtered_ranks(net.lemmas(), emp_scores, stopwords);

    std::vector<std::optional<NodeId>> ids;
    for (const auto& t : targets) {
        auto id = net.find(t);
        if (id && emp_rank[*id] == 0) id.reset();
        ids.push_back(id);
    }

    const std::size_t n = ensemble.size();
    std::vector<std::vector<double>> null_rank(targets.size(), std::vector<double>(n));
    std::vector<std::vector<double>> null_score(targets.size(), std::vector<double>(n));
    parallel_for(n, [&](std::size_t s) {
        const Graph g = ensemble.sample(s);
        if (g.node_count() != net.node_count()) throw InputError("rank_drop: ensemble node set differs");
        const auto sc = closeness_serial(g);
        const auto rk = filtered_ranks(net.lemmas(), sc, stopwords);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (!ids[t]) continue;
            null_rank[t][s] = static_cast<double>(rk[*ids[t]]);
            null_score[t][s] = sc[*ids[t]];
        }
    });

    std::vector<RankDropEntry> out;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        RankDropEntry e;
        e.lemma = targets[t];
        if (!ids[t]) {
            e.missing = true;
            out.push_back(std::move(e));
            continue;
        }
        e.empirical_rank = emp_rank[*ids[t]];
        e.empirical_closeness = emp_scores[*ids[t]];
        e.null_rank = summarize(null_rank[t]);
        e.null_closeness = summarize(null_score[t]);
        e.drop = e.null_rank.mean - static_cast<double>(e.empirical_rank);
        e.p_value = empirical_p(static_cast<double>(e.empirical_rank), null_rank[t], Tail::Two);
        e.significant = e.p_value < alpha;
        e.closeness_z = z_score(e.empirical_closeness, e.null_closeness);
        out.push_back(std::move(e));
    }
    return out;
}

// =========================================================== degeneracy

double star_entropy(std::size_t n) {
    if (n < 2) throw InputError("star_entropy: need at least 2 nodes");
    const double nn = static_cast<double>(n);
    const double hub = (nn - 1) / nn;
    const double leaf = 1.0 / (nn * (nn - 1));
    return -hub * std::log2(hub) - (nn - 1) * leaf * std::log2(leaf);
}

double degeneracy(const Graph& g, std::span<const std::uint64_t> weights) {
    const std::size_t n = g.node_count();
    if (n < 3) throw AnalysisError("degeneracy: need at least 3 nodes");
    if (weights.size() != g.edge_count()) throw InputError("degeneracy: one weight per edge required");

    std::vector<double> strength(n, 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        strength[g.edge(e).u] += static_cast<double>(weights[e]);
        strength[g.edge(e).v] += static_cast<double>(weights[e]);
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!(strength[v] > 0)) throw AnalysisError("degeneracy: isolated node " + std::to_string(v) + " in scope");
    }

    // Column means of the row-normalized adjacency.
    std::vector<double> col(n, 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const double w = static_cast<double>(weights[e]);
        col[ed.v] += w / strength[ed.u];
        col[ed.u] += w / strength[ed.v];
    }
    double h = 0;
    for (double c : col) {
        const double p = c / static_cast<double>(n);
        if (p > 0) h -= p * std::log2(p);
    }
    const double hmax = std::log2(static_cast<double>(n));
    return (hmax - h) / (hmax - star_entropy(n));
}

double degeneracy(const LexicalNetwork& net, const std::optional<std::vector<NodeId>>& subgraph) {
    if (!subgraph) return degeneracy(net.graph(), net.weights());
    std::vector<EdgeId> origin;
    const Graph sub = induced_subgraph(net.graph(), *subgraph, &origin);
    std::vector<std::uint64_t> w;
    w.reserve(origin.size());
    for (EdgeId e : origin) w.push_back(net.weight(e));
    return degeneracy(sub, w);
}

// ============================================================ strengths

std::vector<CcdfPoint> ccdf(std::span<const double> values) {
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    std::vector<CcdfPoint> out;
    const double n = static_cast<double>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] == v[i - 1]) continue;
        out.push_back({v[i], static_cast<double>(v.size() - i) / n});
    }
    return out;
}

std::optional<PowerLawFit> fit_power_law_tail(std::span<const double> values, std::size_t min_tail) {
    std::vector<double> x;
    for (double v : values) {
        if (v > 0 && std::isfinite(v)) x.push_back(v);
    }
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    if (n < std::max<std::size_t>(min_tail, 2)) return std::nullopt;

    std::vector<double> suffix_log(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) suffix_log[i] = suffix_log[i + 1] + std::log(x[i]);

    std::optional<PowerLawFit> best;
    for (std::size_t k = 0; k + min_tail <= n; ++k) {
        if (k > 0 && x[k] == x[k - 1]) continue;
        const double xmin = x[k];
        const std::size_t nt = n - k;
        const double s = suffix_log[k] - static_cast<double>(nt) * std::log(xmin);
        if (!(s > 0)) continue;
        const double alpha = 1.0 + static_cast<double>(nt) / s;

        double ks = 0;
        for (std::size_t i = k; i < n;) {
            std::size_t j = i;
            while (j < n && x[j] == x[i]) ++j;
            const double model = 1.0 - std::pow(x[i] / xmin, 1.0 - alpha);
            const double before = static_cast<double>(i - k) / static_cast<double>(nt);
            const double after = static_cast<double>(j - k) / static_cast<double>(nt);
            ks = std::max({ks, std::abs(before - model), std::abs(after - model)});
            i = j;
        }
        if (!best || ks < best->ks_distance) best = PowerLawFit{alpha, xmin, nt, ks};
    }
    return best;
}

StrengthDistribution strength_distribution(const LexicalNetwork& net, std::size_t min_tail) {
    if (net.node_count() < 10) throw InputError("strength_distribution: need at least 10 nodes");
    StrengthDistribution d;
    d.strengths = net.strengths();
    d.ccdf = ccdf(d.strengths);
    d.tail = fit_power_law_tail(d.strengths, min_tail);
    return d;
}

// ============================================================ shrinkage

namespace {

// Isolated nodes do not form a giant component, so deleting a star centre
// leaves a giant of size 0.
std::size_t linked_giant(const Components& c) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < c.count(); ++k) {
        if (c.size[k] >= 2) best = std::max(best, c.size[k]);
    }
    return best;
}

}  // namespace

std::size_t shrinkage(const Graph& g, NodeId v) {
    const Components full = connected_components(g);
    const std::size_t before = linked_giant(full);
    if (before == 0 || full.size[full.label[v]] != before) return 0;
    return before - linked_giant(connected_components(g, v));
}

ShrinkageResult shrinkage_analysis(const LexicalNetwork& net, const GraphEnsemble& ensemble,
                                   const std::vector<std::string>& targets, double low_percent,
                                   double high_percent) {
    if (ensemble.size() == 0) throw InputError("shrinkage_analysis: empty ensemble");
    ShrinkageResult r;
    r.low_percent = low_percent;
    r.high_percent = high_percent;
    r.null_samples = ensemble.size();
    r.giant_size = giant_component_size(net.graph());

    const Components full = connected_components(net.graph());
    std::vector<std::optional<NodeId>> ids;
    for (const auto& t : targets) ids.push_back(net.find(t));

    std::vector<std::vector<double>> nulls(targets.size(), std::vector<double>(ensemble.size()));
    parallel_for(ensemble.size(), [&](std::size_t s) {
        const Graph g = ensemble.sample(s);
        if (g.node_count() != net.node_count()) throw InputError("shrinkage_analysis: ensemble node set differs");
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (ids[t]) nulls[t][s] = static_cast<double>(shrinkage(g, *ids[t]));
        }
    });

    for (std::size_t t = 0; t < targets.size(); ++t) {
        ShrinkageEntry e;
        e.lemma = targets[t];
        if (!ids[t]) {
            e.missing = true;
            r.entries.push_back(std::move(e));
            continue;
        }
        e.in_giant = full.count() > 0 && full.label[*ids[t]] == full.giant();
        e.shrinkage = shrinkage(net.graph(), *ids[t]);
        e.null = summarize(nulls[t]);
        std::tie(e.centile_low, e.centile_high) = centile_bounds(nulls[t], low_percent, high_percent);
        e.p_lower = empirical_p(static_cast<double>(e.shrinkage), nulls[t], Tail::Less);
        e.p_upper = empirical_p(static_cast<double>(e.shrinkage), nulls[t], Tail::Greater);
        r.entries.push_back(std::move(e));
    }
    return r;
}

// ========================================================== communities

namespace {

// Brandes accumulation from the given sources over live edges.
void accumulate_betweenness(const Graph& g, const std::vector<char>& alive, std::span<const NodeId> sources,
                            std::vector<double>& eb) {
    const std::size_t n = g.node_count();
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0), delta(n, 0.0);
    std::vector<NodeId> order;
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        order.clear();
        dist[s] = 0;
        sigma[s] = 1;
        queue.push_back(s);
        while (!queue.empty()) {
            const NodeId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const Neighbor& nb : g.neighbors(v)) {
                if (!alive[nb.edge]) continue;
                if (dist[nb.node] < 0) {
                    dist[nb.node] = dist[v] + 1;
                    queue.push_back(nb.node);
                }
                if (dist[nb.node] == dist[v] + 1) sigma[nb.node] += sigma[v];
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            for (const Neighbor& nb : g.neighbors(w)) {
                if (!alive[nb.edge] || dist[nb.node] != dist[w] - 1) continue;
                const double c = sigma[nb.node] / sigma[w] * (1.0 + delta[w]);
                eb[nb.edge] += c;
                delta[nb.node] += c;
            }
        }
        for (NodeId v : order) {
            dist[v] = -1;
            sigma[v] = 0;
            delta[v] = 0;
        }
    }
}

std::vector<NodeId> reachable(const Graph& g, const std::vector<char>& alive, NodeId s) {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> out{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : g.neighbors(v)) {
            if (!alive[nb.edge] || seen[nb.node]) continue;
            seen[nb.node] = 1;
            out.push_back(nb.node);
            stack.push_back(nb.node);
        }
    }
    return out;
}

void recompute_component(const Graph& g, const std::vector<char>& alive, const std::vector<NodeId>& nodes,
                         std::vector<double>& eb) {
    for (NodeId v : nodes) {
        for (const Neighbor& nb : g.neighbors(v)) eb[nb.edge] = 0;
    }
    accumulate_betweenness(g, alive, nodes, eb);
}

}  // namespace

std::vector<double> edge_betweenness(const Graph& g) {
    std::vector<char> alive(g.edge_count(), 1);
    std::vector<double> eb(g.edge_count(), 0.0);
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    accumulate_betweenness(g, alive, all, eb);
    return eb;
}

Partition girvan_newman(const Graph& g, std::size_t n_clusters) {
    if (n_clusters < 1) throw InputError("girvan_newman: n_clusters must be >= 1");
    if (n_clusters > g.node_count()) throw InputError("girvan_newman: n_clusters exceeds node count");

    std::vector<char> alive(g.edge_count(), 1);
    std::vector<double> eb = edge_betweenness(g);
    std::size_t components = connected_components(g).count();
    Partition p;

    while (components < n_clusters) {
        EdgeId best = 0;
        bool found = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!alive[e]) continue;
            if (!found) {
                best = e;
                found = true;
                continue;
            }
            const double tol = 1e-9 * std::max(1.0, std::abs(eb[best]));
            if (eb[e] > eb[best] + tol || (std::abs(eb[e] - eb[best]) <= tol && g.edge(e) < g.edge(best))) best = e;
        }
        if (!found) break;
        alive[best] = 0;
        eb[best] = 0;
        p.removed.push_back(g.edge(best));

        const Edge& ed = g.edge(best);
        const auto side_u = reachable(g, alive, ed.u);
        if (std::find(side_u.begin(), side_u.end(), ed.v) == side_u.end()) {
            ++components;
            recompute_component(g, alive, side_u, eb);
            recompute_component(g, alive, reachable(g, alive, ed.v), eb);
        } else {
            recompute_component(g, alive, side_u, eb);
        }
    }

    // Final components over live edges, relabelled by size then smallest id.
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (alive[e]) kept.push_back(g.edge(e));
    }
    const Components c = connected_components(Graph(g.node_count(), std::move(kept)));
    std::vector<std::uint32_t> order(c.count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.size[a] > c.size[b]; });
    std::vector<std::uint32_t> relabel(c.count());
    for (std::uint32_t k = 0; k < order.size(); ++k) relabel[order[k]] = k;
    p.cluster_of.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) p.cluster_of[v] = relabel[c.label[v]];
    p.cluster_count = c.count();
    return p;
}

CommunityReport girvan_newman_clusters(const LexicalNetwork& net, std::size_t n_clusters, const AffectLexicons& lex) {
    CommunityReport r;
    r.partition = girvan_newman(net.graph(), n_clusters);
    r.clusters.resize(r.partition.cluster_count);
    std::vector<std::vector<NodeId>> members(r.partition.cluster_count);
    for (NodeId v = 0; v < net.node_count(); ++v) members[r.partition.cluster_of[v]].push_back(v);
    for (std::size_t k = 0; k < members.size(); ++k) {
        ClusterSummary& cs = r.clusters[k];
        std::size_t pos = 0, neg = 0;
        for (NodeId v : members[k]) {
            cs.lemmas.push_back(net.lemma(v));
            const Valence val = lex.valence_of(net.lemma(v));
            pos += val == Valence::Positive;
            neg += val == Valence::Negative;
        }
        const double size = static_cast<double>(members[k].size());
        cs.positive_fraction = static_cast<double>(pos) / size;
        cs.negative_fraction = static_cast<double>(neg) / size;
        try {
            cs.degeneracy = degeneracy(net, members[k]);
        } catch (const AnalysisError&) {
            cs.degeneracy.reset();
        }
    }
    return r;
}

GiantComponentStats giant_component_stats(const LexicalNetwork& net) {
    GiantComponentStats s;
    if (net.node_count() == 0) return s;
    const auto nodes = giant_component_nodes(net.graph());
    s.nodes = nodes.size();
    s.node_fraction = static_cast<double>(nodes.size()) / static_cast<double>(net.node_count());
    double total = 0, inside = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) total += static_cast<double>(net.strength(v));
    for (NodeId v : nodes) inside += static_cast<double>(net.strength(v));
    s.strength_fraction = total > 0 ? inside / total : 0.0;
    return s;
}

}  // namespace cognet
