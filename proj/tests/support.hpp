#pragma once

// Helpers shared by the test programs: fixture paths, random graphs and
// brute-force reference implementations.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cognet/graph.hpp"
#include "cognet/network.hpp"
#include "cognet/signed_balance.hpp"

namespace testing {

using namespace cognet;

inline std::filesystem::path data_dir() { return COGNET_TEST_DATA; }

inline std::filesystem::path temp_dir(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("cognet-test-" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("cognet-test-" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

// Random connected graph: a random spanning tree plus G(n, p) extras.
inline Graph connected_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::set<Edge> edges;
    for (NodeId v = 1; v < n; ++v) {
        const NodeId u = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        edges.insert({u, v});
    }
    std::bernoulli_distribution coin(p);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.insert({i, j});
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline Graph star(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 1; v < n; ++v) e.push_back({0, v});
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j});
    }
    return Graph(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 1; v < n; ++v) e.push_back({v - 1, v});
    return Graph(n, e);
}

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<int>> a(g.node_count(), std::vector<int>(g.node_count(), 0));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

// O(n^3) triple scan over the adjacency matrix.
inline TriadCensus brute_force_census(const Graph& g, std::span<const Sign> signs) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 2));  // 2: no edge
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        s[g.edge(e).u][g.edge(e).v] = s[g.edge(e).v][g.edge(e).u] = static_cast<int>(signs[e]);
    }
    TriadCensus c;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const int a = s[i][j], b = s[j][k], d = s[i][k];
                if (a == 2 || b == 2 || d == 2) continue;
                if (a == 0 || b == 0 || d == 0) {
                    ++c.excluded;
                    continue;
                }
                const int neg = (a < 0) + (b < 0) + (d < 0);
                if (neg == 0) ++c.ppp;
                if (neg == 1) ++c.ppn;
                if (neg == 2) ++c.pnn;
                if (neg == 3) ++c.nnn;
            }
        }
    }
    return c;
}

// Floyd-Warshall distances, -1 for unreachable.
inline std::vector<std::vector<long>> all_pairs(const Graph& g) {
    const std::size_t n = g.node_count();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = -1;
        }
    }
    return d;
}

// Largest component size by repeated flood fill over an edge list, with
// one node deleted (or none when skip == n).
inline std::size_t brute_giant(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
    std::vector<int> comp(n, -1);
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (s == skip || comp[s] >= 0) continue;
        std::size_t size = 0;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(s);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            ++size;
            for (const Edge& e : edges) {
                std::size_t w = n;
                if (e.u == v) w = e.v;
                if (e.v == v) w = e.u;
                if (w == n || w == skip || comp[w] >= 0) continue;
                comp[w] = static_cast<int>(s);
                stack.push_back(w);
            }
        }
        best = std::max(best, size);
    }
    return best;
}

inline LexicalNetwork network_from(NetworkKind kind, const std::vector<std::tuple<std::string, std::string, std::uint64_t>>& edges) {
    NetworkBuilder b(kind, false);
    for (const auto& [a, c, w] : edges) b.add_edge(a, c, w);
    return b.build();
}

}  // namespace testing
