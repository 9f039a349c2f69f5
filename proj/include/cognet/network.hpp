#pragma once

// LexicalNetwork: an immutable undirected weighted graph over lemmas, shared
// by the co-occurrence, SVO and free-association variants.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cognet/graph.hpp"

namespace cognet {

enum class NetworkKind { CO, SVO, FA };

std::string_view to_string(NetworkKind k);
NetworkKind parse_network_kind(std::string_view s);

class LexicalNetwork {
public:
    LexicalNetwork() = default;

    NetworkKind kind() const noexcept { return kind_; }
    const Graph& graph() const noexcept { return graph_; }
    std::size_t node_count() const noexcept { return lemmas_.size(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }

    // Node ids follow lexicographic lemma order.
    const std::string& lemma(NodeId v) const { return lemmas_[v]; }
    std::span<const std::string> lemmas() const noexcept { return lemmas_; }
    std::optional<NodeId> find(std::string_view lemma) const;
    bool contains(std::string_view lemma) const { return find(lemma).has_value(); }

    std::uint64_t weight(EdgeId e) const { return weights_[e]; }
    std::span<const std::uint64_t> weights() const noexcept { return weights_; }
    std::optional<std::uint64_t> weight(std::string_view a, std::string_view b) const;

    bool tracks_documents() const noexcept { return track_documents_; }
    // Sorted ids of the documents that contributed to edge e.
    const std::vector<std::string>& documents(EdgeId e) const;

    std::uint64_t strength(NodeId v) const;
    std::vector<double> strengths() const;

    const std::map<std::string, std::string>& parameters() const noexcept { return parameters_; }

private:
    friend class NetworkBuilder;

    NetworkKind kind_ = NetworkKind::CO;
    std::vector<std::string> lemmas_;
    Graph graph_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::vector<std::string>> documents_;
    bool track_documents_ = false;
    std::map<std::string, std::string> parameters_;
};

// Accumulates weighted lemma pairs; build() freezes them into a network.
class NetworkBuilder {
public:
    NetworkBuilder(NetworkKind kind, bool track_documents);

    // Explicit isolate (kept even without edges).
    void add_node(std::string_view lemma);
    // Undirected; weights accumulate. Returns false (and adds nothing) for a == b.
    bool add_edge(std::string_view a, std::string_view b, std::uint64_t weight = 1,
                  std::string_view document = {});
    bool has_edge(std::string_view a, std::string_view b) const;
    // Attaches document ids to an existing edge without changing its weight.
    void add_documents(std::string_view a, std::string_view b, std::span<const std::string> documents);
    // Associative merge of partial counts.
    void merge(const NetworkBuilder& other);

    // Drops edges lighter than min_weight, then subtracts (min_weight - 1)
    // from the survivors. Nodes left without edges disappear unless added
    // explicitly.
    void threshold(std::uint64_t min_weight);

    void set_parameter(std::string key, std::string value);

    LexicalNetwork build() const;

private:
    struct Accumulated {
        std::uint64_t weight = 0;
        std::vector<std::string> documents;  // kept sorted and unique
    };

    NetworkKind kind_;
    bool track_documents_;
    std::map<std::string, bool, std::less<>> isolates_;
    std::map<std::pair<std::string, std::string>, Accumulated> edges_;
    std::map<std::string, std::string> parameters_;
};

// Edge-list file: first line "# " + JSON header (format, kind, node and edge
// counts, build parameters, isolates), then lemma_i<TAB>lemma_j<TAB>weight
// and, when documents are tracked, <TAB>comma-separated document ids.
void write_network(std::ostream& out, const LexicalNetwork& net);
LexicalNetwork read_network(std::istream& in, const std::string& source_name);

void save_network(const std::filesystem::path& path, const LexicalNetwork& net);
LexicalNetwork load_network(const std::filesystem::path& path);

}  // namespace cognet
