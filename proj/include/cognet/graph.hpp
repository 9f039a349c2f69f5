#pragma once

// Undirected simple graph over dense integer node ids. All analyses run on
// this; LexicalNetwork adds lemma names, weights and provenance on top.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cognet {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;  // u < v after construction

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    NodeId node;
    EdgeId edge;
};

class Graph {
public:
    Graph() = default;

    // Edge order is kept; endpoints are normalized so that u < v.
    // Throws InputError on self-loops, duplicate edges or out-of-range ids.
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    // Sorted by neighbor id.
    std::span<const Neighbor> neighbors(NodeId v) const noexcept { return adjacency_[v]; }
    std::size_t degree(NodeId v) const noexcept { return adjacency_[v].size(); }
    std::vector<std::size_t> degrees() const;

    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

struct Components {
    std::vector<std::uint32_t> label;  // per node; labels ordered by smallest member id
    std::vector<std::size_t> size;     // per label

    std::size_t count() const noexcept { return size.size(); }
    // Largest component; ties go to the one holding the smallest node id.
    std::uint32_t giant() const;
};

// `removed` nodes (if any) are treated as absent and get label UINT32_MAX.
Components connected_components(const Graph& g, std::optional<NodeId> removed = std::nullopt);
bool is_connected(const Graph& g);

std::vector<NodeId> giant_component_nodes(const Graph& g);
std::size_t giant_component_size(const Graph& g, std::optional<NodeId> removed = std::nullopt);

// Hop distances from source; -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

// Induced subgraph on `keep` (node i of the result is keep[i]). When
// edge_origin is given it receives, per result edge, the source edge id.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep,
                       std::vector<EdgeId>* edge_origin = nullptr);

// A null-model ensemble over a fixed node set. Samples are produced on
// demand (or served from a stored list) so analyses need not hold them all.
class GraphEnsemble {
public:
    using Generator = std::function<Graph(std::size_t)>;

    GraphEnsemble(std::size_t size, Generator generator)
        : size_(size), generator_(std::move(generator)) {}

    static GraphEnsemble from(std::vector<Graph> graphs) {
        auto stored = std::make_shared<const std::vector<Graph>>(std::move(graphs));
        return GraphEnsemble(stored->size(), [stored](std::size_t i) { return (*stored)[i]; });
    }

    std::size_t size() const noexcept { return size_; }
    Graph sample(std::size_t i) const { return generator_(i); }

private:
    std::size_t size_;
    Generator generator_;
};

}  // namespace cognet
