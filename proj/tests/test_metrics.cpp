#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cognet/error.hpp"
#include "cognet/metrics.hpp"
#include "cognet/null_models.hpp"
#include "support.hpp"

using namespace cognet;
using namespace testing;

namespace {

// Entropy-based score evaluated straight from dense matrices; the star
// reference entropy is computed from an actual star matrix.
double dense_entropy(const std::vector<std::vector<double>>& w) {
    const std::size_t n = w.size();
    std::vector<double> col(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double row = std::accumulate(w[i].begin(), w[i].end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) col[j] += w[i][j] / row / static_cast<double>(n);
    }
    double h = 0;
    for (double c : col) {
        if (c > 0) h -= c * std::log2(c);
    }
    return h;
}

double dense_degeneracy(const std::vector<std::vector<double>>& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 1; j < n; ++j) s[0][j] = s[j][0] = 1;
    const double hmax = std::log2(static_cast<double>(n));
    return (hmax - dense_entropy(w)) / (hmax - dense_entropy(s));
}

std::vector<std::vector<double>> dense(const Graph& g, std::span<const std::uint64_t> w) {
    std::vector<std::vector<double>> m(g.node_count(), std::vector<double>(g.node_count(), 0.0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        m[g.edge(e).u][g.edge(e).v] = m[g.edge(e).v][g.edge(e).u] = static_cast<double>(w[e]);
    }
    return m;
}

std::vector<std::uint64_t> ones(const Graph& g) { return std::vector<std::uint64_t>(g.edge_count(), 1); }

std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("n" + std::to_string(100 + i));
    return v;
}

LexicalNetwork lexical(const Graph& g) {
    NetworkBuilder b(NetworkKind::SVO, false);
    const auto nm = names(g.node_count());
    for (const auto& l : nm) b.add_node(l);
    for (const Edge& e : g.edges()) b.add_edge(nm[e.u], nm[e.v]);
    return b.build();
}

}  // namespace

// ---------------------------------------------------------------- closeness

TEST_CASE("closeness by hand") {
    CHECK(closeness(star(5))[0] == 1.0);
    const auto p = closeness(path(3));
    CHECK(p[0] == doctest::Approx(2.0 / 3.0));
    CHECK(p[1] == 1.0);
    CHECK(closeness(Graph(3, {}))[0] == 0.0);
}

TEST_CASE("closeness equals the all-pairs oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 5 + 2 * static_cast<std::size_t>(t) % 56;
        const Graph g = gnp(n, 0.08, rng);
        const auto d = all_pairs(g);
        const auto c = closeness(g);
        for (std::size_t i = 0; i < n; ++i) {
            long sum = 0, reach = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][j] > 0) {
                    sum += d[i][j];
                    ++reach;
                }
            }
            const double expect = sum == 0 ? 0.0 : static_cast<double>(reach) / static_cast<double>(sum);
            CHECK(c[i] == expect);
        }
    }
}

TEST_CASE("adding an edge never lowers closeness within a component") {
    std::mt19937_64 rng(6);
    const Graph g = connected_gnp(25, 0.05, rng);
    const auto before = closeness(g);
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    for (NodeId v = 2; v < 25; ++v) {
        if (!g.find_edge(0, v)) {
            e.push_back({0, v});
            break;
        }
    }
    const auto after = closeness(Graph(25, e));
    for (std::size_t i = 0; i < 25; ++i) CHECK(after[i] >= before[i] - 1e-15);
}

TEST_CASE("rankings") {
    const std::vector<std::string> l{"the", "b", "a", "c"};
    const std::vector<double> s{0.9, 0.5, 0.5, 0.7};
    const auto r = rank_by_score(l, s, {"the"});
    REQUIRE(r.entries.size() == 3);
    CHECK(r.entries[0].lemma == "c");
    CHECK(r.entries[1].lemma == "a");
    CHECK(r.entries[2].lemma == "b");
    CHECK(r.entries[2].rank == 3);
    CHECK(r.content_words_only);
    CHECK(rank_by_score(l, s, {}).entries[0].lemma == "the");
    CHECK(r.rank_of("b") == 3u);
    CHECK_FALSE(r.rank_of("the"));
}

TEST_CASE("rank drop") {
    const auto net = lexical(star(10));
    // Every sample equals the input: ranks never move.
    const GraphEnsemble same(50, [&](std::size_t) { return net.graph(); });
    const auto r = rank_drop(net, same, {"n100", "n105", "zzz"}, {});
    CHECK(r[0].empirical_rank == 1);
    CHECK(r[0].drop == 0.0);
    CHECK_FALSE(r[0].significant);
    CHECK(r[2].missing);

    // Hub of a star with a pendant chain stays first under rewiring.
    std::vector<Edge> e;
    for (NodeId v = 1; v < 15; ++v) e.push_back({0, v});
    e.push_back({1, 2});
    e.push_back({3, 4});
    e.push_back({5, 6});
    const auto net2 = lexical(Graph(15, e));
    NullEnsembleSpec sp;
    sp.n_samples = 200;
    sp.seed = 3;
    const GraphEnsemble rw(200, [&](std::size_t i) { return degree_rewire_sample(net2.graph(), sp, i); });
    const auto d = rank_drop(net2, rw, {"n100"}, {});
    CHECK(d[0].empirical_rank == 1);
    CHECK(d[0].null_rank.mean == 1.0);
    CHECK(d[0].drop == 0.0);
}

// --------------------------------------------------------------- degeneracy

TEST_CASE("degeneracy closed forms") {
    for (std::size_t n : {3u, 4u, 10u, 100u}) {
        const Graph s = star(n);
        CHECK(std::abs(degeneracy(s, ones(s)) - 1.0) < 1e-12);
        const Graph k = complete(n);
        CHECK(std::abs(degeneracy(k, ones(k))) < 1e-12);
        CHECK(std::abs(star_entropy(n) - dense_entropy(dense(s, ones(s)))) < 1e-12);
    }
}

TEST_CASE("degeneracy of a barbell matches direct evaluation") {
    // Two 4-cliques joined by a bridge.
    std::vector<Edge> e;
    for (NodeId i = 0; i < 4; ++i) {
        for (NodeId j = i + 1; j < 4; ++j) {
            e.push_back({i, j});
            e.push_back({i + 4, j + 4});
        }
    }
    e.push_back({3, 4});
    const Graph g(8, e);
    const double expect = dense_degeneracy(dense(g, ones(g)));
    CHECK(degeneracy(g, ones(g)) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect > 0);
    CHECK(expect < 1);
}

TEST_CASE("degeneracy: weights, scale invariance, bounds and errors") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const Graph g = connected_gnp(12 + t, 0.2, rng);
        std::vector<std::uint64_t> w(g.edge_count());
        for (auto& x : w) x = 1 + rng() % 9;
        auto w3 = w;
        for (auto& x : w3) x *= 3;
        CHECK(degeneracy(g, w) == doctest::Approx(dense_degeneracy(dense(g, w))).epsilon(1e-12));
        CHECK(degeneracy(g, w) == doctest::Approx(degeneracy(g, w3)).epsilon(1e-12));
        const double u = degeneracy(g, ones(g));
        CHECK(u >= -1e-12);
        CHECK(u <= 1 + 1e-12);
    }
    CHECK_THROWS_AS(degeneracy(Graph(3, {{0, 1}}), std::vector<std::uint64_t>{1}), AnalysisError);
    CHECK_THROWS_AS(degeneracy(Graph(2, {{0, 1}}), std::vector<std::uint64_t>{1}), AnalysisError);

    const auto net = lexical(star(6));
    CHECK(degeneracy(net) == doctest::Approx(1.0));
    CHECK(degeneracy(net, std::vector<NodeId>{0, 1, 2}) == doctest::Approx(1.0));
}

// ------------------------------------------------------------ strength tail

TEST_CASE("ccdf") {
    const std::vector<double> k(10, 3.0);
    const auto c = ccdf(k);
    REQUIRE(c.size() == 1);
    CHECK(c[0].x == 3.0);
    CHECK(c[0].p == 1.0);
    CHECK_FALSE(fit_power_law_tail(k).has_value());

    const auto s = lexical(star(12)).strengths();
    CHECK(s[0] == 11.0);
    for (std::size_t i = 1; i < 12; ++i) CHECK(s[i] == 1.0);
    const auto cs = ccdf(s);
    REQUIRE(cs.size() == 2);
    CHECK(cs[1].x == 11.0);
    CHECK(cs[1].p == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("tail exponent on a pure power law, and scale equivariance") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(10000);
    for (auto& v : x) v = std::pow(1.0 - u(rng), -1.0 / 1.5);
    const auto fit = fit_power_law_tail(x);
    REQUIRE(fit.has_value());
    CHECK(std::abs(fit->alpha - 2.5) < 0.1);

    std::vector<double> scaled(x);
    for (auto& v : scaled) v *= 7.0;
    const auto f2 = fit_power_law_tail(scaled);
    REQUIRE(f2.has_value());
    CHECK(f2->alpha == doctest::Approx(fit->alpha).epsilon(1e-9));
    CHECK(f2->x_min == doctest::Approx(7.0 * fit->x_min).epsilon(1e-12));
}

TEST_CASE("strength distribution needs ten nodes") {
    CHECK_THROWS_AS(strength_distribution(lexical(star(5))), InputError);
    CHECK(strength_distribution(lexical(star(10))).strengths.size() == 10);
}

// ---------------------------------------------------------------- shrinkage

TEST_CASE("shrinkage by hand") {
    CHECK(shrinkage(star(7), 0) == 7);
    CHECK(shrinkage(star(7), 3) == 1);
    CHECK(shrinkage(path(5), 2) == 3);
    // Outside the giant component.
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    CHECK(shrinkage(g, 4) == 0);
}

TEST_CASE("shrinkage equals brute-force recomputation") {
    // A lone node is not a giant component.
    const auto giant = [](std::size_t n, const std::vector<Edge>& e, std::size_t skip) {
        const std::size_t b = brute_giant(n, e, skip);
        return b >= 2 ? b : 0;
    };
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 10 + static_cast<std::size_t>(t) % 31;
        const Graph g = gnp(n, 1.5 / static_cast<double>(n), rng);
        const std::vector<Edge> e(g.edges().begin(), g.edges().end());
        const std::size_t gc = giant(n, e, n);
        const auto comps = connected_components(g);
        const bool unique = std::count(comps.size.begin(), comps.size.end(), gc) == 1;
        std::size_t leaves = 0, leaf_sum = 0;
        for (NodeId v = 0; v < n; ++v) {
            const std::size_t s = shrinkage(g, v);
            if (gc > 0 && comps.size[comps.label[v]] == gc) {
                CHECK(s == gc - giant(n, e, v));
                CHECK(s <= gc);
                if (unique) CHECK(s >= 1);
                if (unique && g.degree(v) == 1 && gc > 2) {
                    ++leaves;
                    leaf_sum += s;
                }
            } else {
                CHECK(s == 0);
            }
        }
        CHECK(leaf_sum == leaves);
    }
}

TEST_CASE("shrinkage on the two-hub graph matches brute force") {
    std::vector<Edge> e{{0, 1}};
    for (NodeId v = 2; v < 11; ++v) e.push_back({0, v});
    for (NodeId v = 11; v < 20; ++v) e.push_back({1, v});
    const Graph g(20, e);
    for (NodeId v = 0; v < 20; ++v) CHECK(shrinkage(g, v) == 20 - brute_giant(20, e, v));
}

TEST_CASE("shrinkage analysis against a soft configuration ensemble") {
    // Two hubs joined by a bridge, each with its own leaves.
    std::vector<Edge> e{{0, 1}};
    for (NodeId v = 2; v < 11; ++v) e.push_back({0, v});
    for (NodeId v = 11; v < 20; ++v) e.push_back({1, v});
    const Graph g(20, e);
    const auto net = lexical(g);
    const auto fit = fit_soft_weighted_cm(net);
    NullEnsembleSpec sp;
    sp.kind = NullKind::SoftWeightedCM;
    sp.n_samples = 200;
    sp.seed = 8;
    const GraphEnsemble ens(200, [&](std::size_t i) { return sample_soft_cm_one(fit, sp, i).graph; });
    const auto r = shrinkage_analysis(net, ens, {"n100", "n105", "nope"});
    CHECK(r.giant_size == 20);
    CHECK(r.entries[0].shrinkage == 10);
    CHECK(r.entries[1].shrinkage == 1);
    CHECK(r.entries[2].missing);
    CHECK(r.entries[0].centile_low <= r.entries[0].centile_high);
    CHECK(r.entries[0].p_lower > 0);
    CHECK(r.entries[0].p_upper <= 1);
}

// -------------------------------------------------------------- communities

TEST_CASE("edge betweenness on a path") {
    const auto eb = edge_betweenness(path(4));
    // Pairs crossing edge 0-1: 3, edge 1-2: 4, counted from both ends.
    CHECK(eb[0] == doctest::Approx(6.0));
    CHECK(eb[1] == doctest::Approx(8.0));
}

TEST_CASE("Girvan-Newman basics") {
    const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    const auto p = girvan_newman(g, 2);
    CHECK(p.cluster_count == 2);
    REQUIRE(p.removed.size() == 1);
    CHECK(p.removed[0] == Edge{2, 3});
    CHECK(p.cluster_of[0] == p.cluster_of[2]);
    CHECK(p.cluster_of[0] != p.cluster_of[3]);
    CHECK(p.cluster_of[0] == 0);  // equal sizes: smallest id first

    const auto one = girvan_newman(g, 1);
    CHECK(one.removed.empty());
    CHECK(one.cluster_count == 1);

    const Graph two(4, {{0, 1}, {2, 3}});
    CHECK(girvan_newman(two, 2).removed.empty());
    CHECK_THROWS_AS(girvan_newman(g, 7), InputError);
}

TEST_CASE("Girvan-Newman recovers a planted partition") {
    std::mt19937_64 rng(42);
    std::bernoulli_distribution in(0.9), out(0.05);
    std::vector<Edge> e;
    for (NodeId i = 0; i < 24; ++i) {
        for (NodeId j = i + 1; j < 24; ++j) {
            if (i / 6 == j / 6 ? in(rng) : out(rng)) e.push_back({i, j});
        }
    }
    const Graph g(24, e);
    REQUIRE(is_connected(g));
    const auto p = girvan_newman(g, 4);
    for (NodeId i = 0; i < 24; ++i) {
        for (NodeId j = 0; j < 24; ++j) CHECK((p.cluster_of[i] == p.cluster_of[j]) == (i / 6 == j / 6));
    }
}

TEST_CASE("cluster summaries") {
    const auto net = network_from(NetworkKind::SVO, {{"joy", "love", 1}, {"love", "hope", 1}, {"joy", "hope", 1},
                                                     {"hope", "war", 1}, {"war", "pain", 1}, {"pain", "fear", 1},
                                                     {"war", "fear", 1}});
    AffectLexicons lex;
    lex.valence = {{"joy", Valence::Positive}, {"love", Valence::Positive}, {"war", Valence::Negative},
                   {"pain", Valence::Negative}};
    const auto r = girvan_newman_clusters(net, 2, lex);
    REQUIRE(r.clusters.size() == 2);
    for (const auto& c : r.clusters) {
        CHECK(c.lemmas.size() == 3);
        REQUIRE(c.degeneracy.has_value());
        CHECK(*c.degeneracy == doctest::Approx(0.0).epsilon(1e-12));
    }
    const auto& pos = r.clusters[0].lemmas[0] == "fear" ? r.clusters[1] : r.clusters[0];
    CHECK(pos.positive_fraction == doctest::Approx(2.0 / 3.0));
    CHECK(pos.negative_fraction == 0.0);
}

// --------------------------------------------------------- giant component

TEST_CASE("giant component statistics") {
    const auto one = giant_component_stats(lexical(connected_gnp(10, 0.2, *std::make_unique<std::mt19937_64>(1))));
    CHECK(one.node_fraction == 1.0);
    CHECK(one.strength_fraction == 1.0);

    std::vector<Edge> e;
    for (NodeId i = 0; i < 5; ++i) {
        for (NodeId j = i + 1; j < 5; ++j) {
            e.push_back({i, j});
            e.push_back({i + 5, j + 5});
        }
    }
    const auto net = lexical(Graph(10, e));
    const auto two = giant_component_stats(net);
    CHECK(two.node_fraction == 0.5);
    CHECK(two.strength_fraction == 0.5);
    CHECK(giant_component_nodes(net.graph()).front() == 0);

    const auto three = network_from(NetworkKind::SVO, {{"a", "b", 3}, {"b", "c", 1}, {"d", "e", 2}, {"f", "g", 1}});
    const auto s = giant_component_stats(three);
    CHECK(s.nodes == 3);
    CHECK(s.node_fraction == doctest::Approx(3.0 / 7.0));
    CHECK(s.strength_fraction == doctest::Approx(8.0 / 14.0));
}
