#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hedge {

using NodeId = std::uint32_t;
using Label = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Refusal raised when an exact computation would exceed its size guard.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Immutable simple graph in compressed sparse row form.
 *
 * Node ids are dense (0..n-1). Every adjacency list is sorted and free of
 * duplicates and self-loops. For undirected graphs the in-lists alias the
 * out-lists. The original file labels are kept so output can be translated
 * back.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph, silently dropping self-loops and parallel edges.
    static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                            bool directed, std::vector<Label> labels = {}) {
        Graph g;
        g.n_ = n;
        g.directed_ = directed;
        if (labels.empty()) {
            labels.resize(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
        }
        if (labels.size() != n) throw std::invalid_argument("label count does not match node count");
        g.labels_ = std::move(labels);

        std::vector<std::pair<NodeId, NodeId>> arcs;
        arcs.reserve(directed ? edges.size() : 2 * edges.size());
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (u == v) continue;
            arcs.emplace_back(u, v);
            if (!directed) arcs.emplace_back(v, u);
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

        build_csr(n, arcs, g.out_offsets_, g.out_targets_);
        if (directed) {
            for (auto& a : arcs) std::swap(a.first, a.second);
            std::sort(arcs.begin(), arcs.end());
            build_csr(n, arcs, g.in_offsets_, g.in_targets_);
        }
        return g;
    }

    std::size_t num_nodes() const noexcept { return n_; }

    /// Edge count: arcs for directed graphs, unordered pairs for undirected ones.
    std::size_t num_edges() const noexcept {
        return directed_ ? out_targets_.size() : out_targets_.size() / 2;
    }

    bool directed() const noexcept { return directed_; }

    std::span<const NodeId> out(NodeId v) const {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }

    std::span<const NodeId> in(NodeId v) const {
        if (!directed_) return out(v);
        return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
    }

    std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }

    bool has_edge(NodeId u, NodeId v) const {
        auto adj = out(u);
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    Label label(NodeId v) const { return labels_[v]; }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    /// Every arc (u, v); for undirected graphs each edge appears once with u < v.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const {
        std::vector<std::pair<NodeId, NodeId>> result;
        result.reserve(num_edges());
        for (NodeId u = 0; u < n_; ++u)
            for (NodeId v : out(u))
                if (directed_ || u < v) result.emplace_back(u, v);
        return result;
    }

    /// Undirected view with the same node ids and labels.
    Graph symmetrized() const {
        if (!directed_) return *this;
        auto edges = edge_list();
        return from_edges(n_, edges, false, labels_);
    }

private:
    static void build_csr(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& arcs,
                          std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
        offsets.assign(n + 1, 0);
        for (auto [u, v] : arcs) ++offsets[u + 1];
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        targets.resize(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) targets[i] = arcs[i].second;
    }

    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<NodeId> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<NodeId> in_targets_;
    std::vector<Label> labels_;
};

struct TemporalEdge {
    Label u;
    Label v;
    std::int64_t t;

    bool operator==(const TemporalEdge&) const = default;
};

/// Timestamped edges kept in ascending time order (stable for ties).
using TemporalEdgeList = std::vector<TemporalEdge>;

namespace detail {

inline bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r\n\v\f");
    return pos == std::string::npos || line[pos] == '#' || line[pos] == '%';
}

inline std::int64_t parse_token(std::istringstream& in, std::size_t line_no, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw ParseError(std::string("missing ") + what, line_no);
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad integer for ") + what + ": '" + tok + "'", line_no);
    }
    if (used != tok.size()) throw ParseError(std::string("bad integer for ") + what + ": '" + tok + "'", line_no);
    return value;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

/// Dense remapping of arbitrary labels in first-seen order.
class LabelMap {
public:
    NodeId intern(Label l) {
        auto [it, inserted] = index_.try_emplace(l, static_cast<NodeId>(labels_.size()));
        if (inserted) labels_.push_back(l);
        return it->second;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    std::vector<Label> release() { return std::move(labels_); }

private:
    std::unordered_map<Label, NodeId> index_;
    std::vector<Label> labels_;
};

}  // namespace detail

inline Graph parse_edge_list(std::istream& in, bool directed) {
    detail::LabelMap labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skip_line(line)) continue;
        std::istringstream fields(line);
        auto u = detail::parse_token(fields, line_no, "source");
        auto v = detail::parse_token(fields, line_no, "target");
        const NodeId a = labels.intern(u);
        edges.emplace_back(a, labels.intern(v));
    }
    auto n = labels.size();
    return Graph::from_edges(n, edges, directed, labels.release());
}

/// Reads a SNAP-style edge list; a third column (timestamp) is ignored.
inline Graph load_edge_list(const std::string& path, bool directed) {
    auto in = detail::open_input(path);
    return parse_edge_list(in, directed);
}

inline TemporalEdgeList parse_temporal_edge_list(std::istream& in) {
    TemporalEdgeList result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skip_line(line)) continue;
        std::istringstream fields(line);
        TemporalEdge e{};
        e.u = detail::parse_token(fields, line_no, "source");
        e.v = detail::parse_token(fields, line_no, "target");
        e.t = detail::parse_token(fields, line_no, "timestamp");
        result.push_back(e);
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
    return result;
}

inline TemporalEdgeList load_temporal_edge_list(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_temporal_edge_list(in);
}

/// Builds a graph from labelled edges, remapping labels densely in first-seen order.
inline Graph graph_from_labelled_edges(std::span<const TemporalEdge> edges, bool directed) {
    detail::LabelMap labels;
    std::vector<std::pair<NodeId, NodeId>> dense;
    dense.reserve(edges.size());
    for (const auto& e : edges) {
        const NodeId a = labels.intern(e.u);
        dense.emplace_back(a, labels.intern(e.v));
    }
    auto n = labels.size();
    return Graph::from_edges(n, dense, directed, labels.release());
}

/// Writes "u v" lines using original labels, preceded by '#' header lines.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {}) {
    for (const auto& h : header) out << "# " << h << '\n';
    out << "# nodes " << g.num_nodes() << " edges " << g.num_edges()
        << (g.directed() ? " directed" : " undirected") << '\n';
    for (auto [u, v] : g.edge_list()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace hedge
