#include "cognet/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "cognet/error.hpp"

namespace cognet {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(node_count) {
    if (edges_.size() >= std::numeric_limits<EdgeId>::max()) {
        throw InputError("graph: too many edges");
    }
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        Edge& ed = edges_[e];
        if (ed.u == ed.v) throw InputError("graph: self-loop on node " + std::to_string(ed.u));
        if (ed.u >= node_count || ed.v >= node_count) {
            throw InputError("graph: edge endpoint out of range");
        }
        if (ed.u > ed.v) std::swap(ed.u, ed.v);
        adjacency_[ed.u].push_back({ed.v, e});
        adjacency_[ed.v].push_back({ed.u, e});
    }
    for (NodeId v = 0; v < adjacency_.size(); ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
        for (std::size_t i = 1; i < adj.size(); ++i) {
            if (adj[i].node == adj[i - 1].node) {
                throw InputError("graph: duplicate edge " + std::to_string(v) + "-" +
                                 std::to_string(adj[i].node));
            }
        }
    }
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(node_count());
    for (NodeId v = 0; v < d.size(); ++v) d[v] = degree(v);
    return d;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
    if (a >= node_count() || b >= node_count()) return std::nullopt;
    const auto& adj = adjacency_[a];
    auto it = std::lower_bound(adj.begin(), adj.end(), b,
                               [](const Neighbor& n, NodeId x) { return n.node < x; });
    if (it != adj.end() && it->node == b) return it->edge;
    return std::nullopt;
}

std::uint32_t Components::giant() const {
    if (size.empty()) throw AnalysisError("graph has no components");
    // Labels are assigned in order of smallest member id, so the first
    // maximum wins the tie-break.
    return static_cast<std::uint32_t>(std::max_element(size.begin(), size.end()) - size.begin());
}

Components connected_components(const Graph& g, std::optional<NodeId> removed) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    Components c;
    c.label.assign(g.node_count(), unset);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (c.label[s] != unset || (removed && *removed == s)) continue;
        const auto id = static_cast<std::uint32_t>(c.size.size());
        std::size_t count = 0;
        c.label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++count;
            for (const Neighbor& n : g.neighbors(v)) {
                if (c.label[n.node] != unset || (removed && *removed == n.node)) continue;
                c.label[n.node] = id;
                stack.push_back(n.node);
            }
        }
        c.size.push_back(count);
    }
    return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count() <= 1; }

std::vector<NodeId> giant_component_nodes(const Graph& g) {
    if (g.node_count() == 0) return {};
    const Components c = connected_components(g);
    const auto gc = c.giant();
    std::vector<NodeId> nodes;
    nodes.reserve(c.size[gc]);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (c.label[v] == gc) nodes.push_back(v);
    }
    return nodes;
}

std::size_t giant_component_size(const Graph& g, std::optional<NodeId> removed) {
    const Components c = connected_components(g, removed);
    if (c.count() == 0) return 0;
    return c.size[c.giant()];
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
    std::vector<int> dist(g.node_count(), -1);
    std::deque<NodeId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (const Neighbor& n : g.neighbors(v)) {
            if (dist[n.node] < 0) {
                dist[n.node] = dist[v] + 1;
                queue.push_back(n.node);
            }
        }
    }
    return dist;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep, std::vector<EdgeId>* edge_origin) {
    constexpr auto absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(g.node_count(), absent);
    for (NodeId i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.node_count()) throw InputError("induced_subgraph: node out of range");
        if (remap[keep[i]] != absent) throw InputError("induced_subgraph: repeated node");
        remap[keep[i]] = i;
    }
    std::vector<Edge> edges;
    if (edge_origin) edge_origin->clear();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (remap[ed.u] == absent || remap[ed.v] == absent) continue;
        edges.push_back({remap[ed.u], remap[ed.v]});
        if (edge_origin) edge_origin->push_back(e);
    }
    return Graph(keep.size(), std::move(edges));
}

}  // namespace cognet
