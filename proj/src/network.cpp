#include "cognet/network.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "cognet/error.hpp"

namespace cognet {

namespace {

constexpr std::string_view kFormat = "cognet-edgelist";
constexpr int kFormatVersion = 1;

void insert_sorted(std::vector<std::string>& v, std::string_view s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) v.insert(it, std::string(s));
}

}  // namespace

std::string_view to_string(NetworkKind k) {
    switch (k) {
        case NetworkKind::CO: return "CO";
        case NetworkKind::SVO: return "SVO";
        case NetworkKind::FA: return "FA";
    }
    return "?";
}

NetworkKind parse_network_kind(std::string_view s) {
    if (s == "CO") return NetworkKind::CO;
    if (s == "SVO") return NetworkKind::SVO;
    if (s == "FA") return NetworkKind::FA;
    throw InputError("unknown network kind '" + std::string(s) + "'");
}

std::optional<NodeId> LexicalNetwork::find(std::string_view lemma) const {
    auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), lemma);
    if (it == lemmas_.end() || *it != lemma) return std::nullopt;
    return static_cast<NodeId>(it - lemmas_.begin());
}

std::optional<std::uint64_t> LexicalNetwork::weight(std::string_view a, std::string_view b) const {
    const auto u = find(a);
    const auto v = find(b);
    if (!u || !v) return std::nullopt;
    const auto e = graph_.find_edge(*u, *v);
    if (!e) return std::nullopt;
    return weights_[*e];
}

const std::vector<std::string>& LexicalNetwork::documents(EdgeId e) const {
    if (!track_documents_) throw AnalysisError("network was built without document tracking");
    return documents_[e];
}

std::uint64_t LexicalNetwork::strength(NodeId v) const {
    std::uint64_t s = 0;
    for (const Neighbor& n : graph_.neighbors(v)) s += weights_[n.edge];
    return s;
}

std::vector<double> LexicalNetwork::strengths() const {
    std::vector<double> s(node_count());
    for (NodeId v = 0; v < s.size(); ++v) s[v] = static_cast<double>(strength(v));
    return s;
}

NetworkBuilder::NetworkBuilder(NetworkKind kind, bool track_documents)
    : kind_(kind), track_documents_(track_documents) {}

void NetworkBuilder::add_node(std::string_view lemma) {
    if (lemma.empty()) throw InputError("empty lemma");
    isolates_.emplace(std::string(lemma), true);
}

bool NetworkBuilder::add_edge(std::string_view a, std::string_view b, std::uint64_t weight,
                              std::string_view document) {
    if (a == b) return false;
    if (a.empty() || b.empty()) throw InputError("empty lemma");
    if (weight == 0) throw InputError("edge weight must be positive");
    auto key = a < b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
    Accumulated& acc = edges_[std::move(key)];
    acc.weight += weight;
    if (track_documents_ && !document.empty()) insert_sorted(acc.documents, document);
    return true;
}

bool NetworkBuilder::has_edge(std::string_view a, std::string_view b) const {
    auto key = a < b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
    return edges_.contains(key);
}

void NetworkBuilder::add_documents(std::string_view a, std::string_view b,
                                   std::span<const std::string> documents) {
    if (!track_documents_ || documents.empty()) return;
    auto key = a < b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
    auto it = edges_.find(key);
    if (it == edges_.end()) throw InputError("add_documents: no edge " + key.first + "-" + key.second);
    for (const auto& d : documents) insert_sorted(it->second.documents, d);
}

void NetworkBuilder::merge(const NetworkBuilder& other) {
    for (const auto& [lemma, _] : other.isolates_) isolates_.emplace(lemma, true);
    for (const auto& [key, acc] : other.edges_) {
        Accumulated& mine = edges_[key];
        mine.weight += acc.weight;
        for (const auto& d : acc.documents) insert_sorted(mine.documents, d);
    }
}

void NetworkBuilder::threshold(std::uint64_t min_weight) {
    if (min_weight < 1) throw InputError("min_weight must be >= 1");
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->second.weight < min_weight) {
            it = edges_.erase(it);
        } else {
            it->second.weight -= min_weight - 1;
            ++it;
        }
    }
}

void NetworkBuilder::set_parameter(std::string key, std::string value) {
    parameters_[std::move(key)] = std::move(value);
}

LexicalNetwork NetworkBuilder::build() const {
    LexicalNetwork net;
    net.kind_ = kind_;
    net.track_documents_ = track_documents_;
    net.parameters_ = parameters_;

    std::vector<std::string> lemmas;
    for (const auto& [lemma, _] : isolates_) lemmas.push_back(lemma);
    for (const auto& [key, _] : edges_) {
        lemmas.push_back(key.first);
        lemmas.push_back(key.second);
    }
    std::sort(lemmas.begin(), lemmas.end());
    lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
    net.lemmas_ = std::move(lemmas);

    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    net.weights_.reserve(edges_.size());
    // The map is ordered by (lemma, lemma), which is also (id, id) order.
    for (const auto& [key, acc] : edges_) {
        edges.push_back({*net.find(key.first), *net.find(key.second)});
        net.weights_.push_back(acc.weight);
        if (track_documents_) net.documents_.push_back(acc.documents);
    }
    net.graph_ = Graph(net.lemmas_.size(), std::move(edges));
    return net;
}

void write_network(std::ostream& out, const LexicalNetwork& net) {
    nlohmann::json header;
    header["format"] = kFormat;
    header["version"] = kFormatVersion;
    header["kind"] = to_string(net.kind());
    header["nodes"] = net.node_count();
    header["edges"] = net.edge_count();
    header["track_documents"] = net.tracks_documents();
    header["parameters"] = net.parameters();
    std::vector<std::string> isolates;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (net.graph().degree(v) == 0) isolates.push_back(net.lemma(v));
    }
    header["isolates"] = isolates;
    out << "# " << header.dump() << '\n';

    for (const std::string& l : net.lemmas()) {
        if (l.find_first_of("\t\n\r") != std::string::npos) {
            throw InputError("lemma '" + l + "' contains a tab or newline");
        }
    }
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.graph().edge(e);
        out << net.lemma(ed.u) << '\t' << net.lemma(ed.v) << '\t' << net.weight(e);
        if (net.tracks_documents()) {
            out << '\t';
            const auto& docs = net.documents(e);
            for (std::size_t i = 0; i < docs.size(); ++i) {
                if (docs[i].find_first_of(",\t\n") != std::string::npos) {
                    throw InputError("document id '" + docs[i] + "' contains a separator");
                }
                out << (i ? "," : "") << docs[i];
            }
        }
        out << '\n';
    }
}

LexicalNetwork read_network(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw ParseError(source_name, 1, "missing JSON header line");
    }
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line.substr(2));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source_name, 1, std::string("bad JSON header: ") + e.what());
    }
    if (!header.is_object() || header.value("format", "") != kFormat) {
        throw ParseError(source_name, 1, "not a cognet edge list");
    }
    if (header.value("version", 0) != kFormatVersion) {
        throw ParseError(source_name, 1, "unsupported edge-list version");
    }

    NetworkBuilder builder(parse_network_kind(header.value("kind", "")),
                           header.value("track_documents", false));
    try {
        for (const auto& [k, v] : header.at("parameters").items()) builder.set_parameter(k, v.get<std::string>());
        for (const auto& iso : header.at("isolates")) builder.add_node(iso.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source_name, 1, std::string("bad header field: ") + e.what());
    }

    std::size_t line_no = 1;
    std::size_t edge_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (;;) {
            const auto pos = line.find('\t', start);
            cols.push_back(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (cols.size() < 3 || cols.size() > 4) throw ParseError(source_name, line_no, "expected 3 or 4 columns");
        std::uint64_t w = 0;
        auto [p, ec] = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), w);
        if (ec != std::errc() || p != cols[2].data() + cols[2].size() || w == 0) {
            throw ParseError(source_name, line_no, "weight must be a positive integer");
        }
        if (cols[0] == cols[1]) throw ParseError(source_name, line_no, "self-loop");
        std::vector<std::string> docs;
        if (cols.size() == 4 && !cols[3].empty()) {
            std::size_t s = 0;
            for (;;) {
                const auto pos = cols[3].find(',', s);
                docs.push_back(cols[3].substr(s, pos == std::string::npos ? std::string::npos : pos - s));
                if (pos == std::string::npos) break;
                s = pos + 1;
            }
        }
        if (builder.has_edge(cols[0], cols[1])) throw ParseError(source_name, line_no, "duplicate edge");
        builder.add_edge(cols[0], cols[1], w);
        builder.add_documents(cols[0], cols[1], docs);
        ++edge_lines;
    }
    if (edge_lines != header.value("edges", std::size_t{0})) {
        throw ParseError(source_name, line_no, "edge count does not match header");
    }
    LexicalNetwork net = builder.build();
    if (net.node_count() != header.value("nodes", std::size_t{0})) {
        throw ParseError(source_name, line_no, "node count does not match header");
    }
    return net;
}

void save_network(const std::filesystem::path& path, const LexicalNetwork& net) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    write_network(out, net);
}

LexicalNetwork load_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open network file " + path.string());
    return read_network(in, path.string());
}

}  // namespace cognet
