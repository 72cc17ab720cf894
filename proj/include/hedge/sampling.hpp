#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>

#include "hedge/graph.hpp"
#include "hedge/shortest_paths.hpp"

namespace hedge {

using Rng = std::mt19937_64;

/// Sorted, duplicate-free node set produced by one sampler draw.
using HyperEdge = std::vector<NodeId>;

enum class SamplerKind { betweenness, coverage, kpath, rr_influence };

inline std::string_view to_string(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::betweenness: return "betweenness";
        case SamplerKind::coverage: return "coverage";
        case SamplerKind::kpath: return "kpath";
        case SamplerKind::rr_influence: return "rr-influence";
    }
    return "unknown";
}

inline SamplerKind parse_sampler_kind(std::string_view name) {
    if (name == "betweenness" || name == "bwc") return SamplerKind::betweenness;
    if (name == "coverage") return SamplerKind::coverage;
    if (name == "kpath") return SamplerKind::kpath;
    if (name == "rr-influence" || name == "rr") return SamplerKind::rr_influence;
    throw std::invalid_argument("unknown sampler '" + std::string(name) + "'");
}

struct SamplerSpec {
    SamplerKind kind = SamplerKind::betweenness;
    unsigned kappa = 2;  // kpath only
    double p = 0.01;     // rr-influence only
};

/// Normalizer alpha with Pr(h meets S) = C(S) / alpha.
inline double alpha(const SamplerSpec& spec, const Graph& g) {
    const auto n = static_cast<double>(g.num_nodes());
    switch (spec.kind) {
        case SamplerKind::betweenness:
        case SamplerKind::coverage: return n * (n - 1);
        case SamplerKind::kpath:
        case SamplerKind::rr_influence: return n;
    }
    return n;
}

namespace detail {

inline NodeId uniform_node(std::size_t n, Rng& rng) {
    return static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

/// Uniform ordered pair of distinct nodes.
inline std::pair<NodeId, NodeId> uniform_pair(std::size_t n, Rng& rng) {
    NodeId s = uniform_node(n, rng);
    NodeId t = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 2)(rng));
    if (t >= s) ++t;
    return {s, t};
}

inline std::uint64_t uniform_below(std::uint64_t bound, Rng& rng) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

inline BigCount uniform_below(const BigCount& bound, Rng& rng) {
    return boost::random::uniform_int_distribution<BigCount>(0, bound - 1)(rng);
}

/// Reusable per-worker BFS scratch space; reset cost is proportional to the nodes touched.
class SampleWorkspace {
public:
    explicit SampleWorkspace(std::size_t n) : dist_(n, kUnreachable), back_dist_(n, kUnreachable), mark_(n, 0) {}

    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> back_dist_;
    std::vector<std::uint64_t> sigma_;
    std::vector<NodeId> order_;
    std::vector<NodeId> back_order_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;

    void clear_forward() {
        for (NodeId v : order_) dist_[v] = kUnreachable;
        order_.clear();
    }

    void clear_backward() {
        for (NodeId v : back_order_) back_dist_[v] = kUnreachable;
        back_order_.clear();
    }

    std::uint32_t next_stamp() {
        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        return stamp_;
    }
};

/// BFS from s that stops once t's level is complete; fills dist_ and order_.
template <bool Reverse>
void truncated_bfs(const Graph& g, NodeId s, NodeId t, std::vector<std::uint32_t>& dist, std::vector<NodeId>& order,
                   std::uint32_t limit = kUnreachable) {
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId v = order[head];
        if (dist[t] != kUnreachable && dist[v] >= dist[t]) break;
        if (dist[v] >= limit) break;
        auto adj = Reverse ? g.in(v) : g.out(v);
        for (NodeId w : adj) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
        }
    }
}

/// Path counts over the truncated BFS order. Returns false on 64-bit overflow.
template <typename Count>
bool count_truncated(const Graph& g, NodeId s, const std::vector<std::uint32_t>& dist,
                     const std::vector<NodeId>& order, std::vector<Count>& sigma) {
    if (sigma.size() < dist.size()) sigma.resize(dist.size());
    sigma[s] = 1;
    for (std::size_t i = 1; i < order.size(); ++i) {
        NodeId v = order[i];
        Count acc = 0;
        for (NodeId u : g.in(v))
            if (dist[u] != kUnreachable && dist[u] + 1 == dist[v] && !checked_add(acc, sigma[u])) return false;
        sigma[v] = std::move(acc);
    }
    return true;
}

/// Walks back from t choosing predecessor u with probability sigma(u) / sigma(v).
template <typename Count>
HyperEdge backtrack_path(const Graph& g, NodeId s, NodeId t, const std::vector<std::uint32_t>& dist,
                         const std::vector<Count>& sigma, Rng& rng) {
    HyperEdge path;
    NodeId v = t;
    while (true) {
        Count r = uniform_below(sigma[v], rng);
        NodeId chosen = kNoNode;
        for (NodeId u : g.in(v)) {
            if (dist[u] == kUnreachable || dist[u] + 1 != dist[v]) continue;
            if (r < sigma[u]) {
                chosen = u;
                break;
            }
            r -= sigma[u];
        }
        if (chosen == s) break;
        path.push_back(chosen);
        v = chosen;
    }
    std::sort(path.begin(), path.end());
    return path;
}

}  // namespace detail

/**
 * Draws hyper-edges for one sampler kind on one graph.
 *
 * Holds scratch buffers so repeated draws cost O(nodes touched). One
 * instance per worker; the graph must outlive it.
 */
class Sampler {
public:
    Sampler(Graph&&, SamplerSpec) = delete;

    Sampler(const Graph& g, SamplerSpec spec) : g_(&g), spec_(spec), ws_(g.num_nodes()) {
        switch (spec.kind) {
            case SamplerKind::betweenness:
            case SamplerKind::coverage:
                if (g.num_nodes() < 2) throw std::invalid_argument("sampler needs at least 2 nodes");
                break;
            case SamplerKind::kpath:
                if (g.num_nodes() < 1) throw std::invalid_argument("sampler needs at least 1 node");
                if (spec.kappa < 1) throw std::invalid_argument("kappa must be positive");
                break;
            case SamplerKind::rr_influence:
                if (g.num_nodes() < 1) throw std::invalid_argument("sampler needs at least 1 node");
                if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
                break;
        }
    }

    const SamplerSpec& spec() const noexcept { return spec_; }

    HyperEdge draw(Rng& rng) {
        switch (spec_.kind) {
            case SamplerKind::betweenness: {
                auto [s, t] = detail::uniform_pair(g_->num_nodes(), rng);
                return path_between(s, t, rng);
            }
            case SamplerKind::coverage: {
                auto [s, t] = detail::uniform_pair(g_->num_nodes(), rng);
                return cover_between(s, t);
            }
            case SamplerKind::kpath: return walk_from(detail::uniform_node(g_->num_nodes(), rng), rng);
            case SamplerKind::rr_influence: return reverse_reach(detail::uniform_node(g_->num_nodes(), rng), rng);
        }
        return {};
    }

    /// Internal nodes of one uniformly chosen s-t shortest path.
    HyperEdge path_between(NodeId s, NodeId t, Rng& rng) {
        const Graph& g = *g_;
        ws_.clear_forward();
        detail::truncated_bfs<false>(g, s, t, ws_.dist_, ws_.order_);
        if (ws_.dist_[t] == kUnreachable || ws_.dist_[t] <= 1) return {};
        if (detail::count_truncated(g, s, ws_.dist_, ws_.order_, ws_.sigma_))
            return detail::backtrack_path(g, s, t, ws_.dist_, ws_.sigma_, rng);
        std::vector<BigCount> big;
        detail::count_truncated(g, s, ws_.dist_, ws_.order_, big);
        return detail::backtrack_path(g, s, t, ws_.dist_, big, rng);
    }

    /// Every node on at least one s-t shortest path, endpoints excluded.
    HyperEdge cover_between(NodeId s, NodeId t) {
        const Graph& g = *g_;
        ws_.clear_forward();
        detail::truncated_bfs<false>(g, s, t, ws_.dist_, ws_.order_);
        const auto d = ws_.dist_[t];
        if (d == kUnreachable || d <= 1) return {};
        ws_.clear_backward();
        detail::truncated_bfs<true>(g, t, s, ws_.back_dist_, ws_.back_order_);
        HyperEdge h;
        for (NodeId v : ws_.order_) {
            if (v == s || v == t) continue;
            auto bd = ws_.back_dist_[v];
            if (bd != kUnreachable && ws_.dist_[v] + bd == d) h.push_back(v);
        }
        std::sort(h.begin(), h.end());
        return h;
    }

    /// Random simple walk of at most kappa edges from s, including s.
    HyperEdge walk_from(NodeId s, Rng& rng) {
        const Graph& g = *g_;
        const auto stamp = ws_.next_stamp();
        HyperEdge visited{s};
        ws_.mark_[s] = stamp;
        std::vector<NodeId> fresh;
        NodeId v = s;
        for (unsigned step = 0; step < spec_.kappa; ++step) {
            fresh.clear();
            for (NodeId w : g.out(v))
                if (ws_.mark_[w] != stamp) fresh.push_back(w);
            if (fresh.empty()) break;
            v = fresh[detail::uniform_node(fresh.size(), rng)];
            ws_.mark_[v] = stamp;
            visited.push_back(v);
        }
        std::sort(visited.begin(), visited.end());
        return visited;
    }

    /// Nodes reaching target through independently live edges (live with probability p).
    HyperEdge reverse_reach(NodeId target, Rng& rng) {
        const Graph& g = *g_;
        const auto stamp = ws_.next_stamp();
        std::bernoulli_distribution live(spec_.p);
        HyperEdge reached{target};
        ws_.mark_[target] = stamp;
        for (std::size_t head = 0; head < reached.size(); ++head) {
            NodeId v = reached[head];
            for (NodeId u : g.in(v)) {
                if (ws_.mark_[u] == stamp) continue;
                if (live(rng)) {
                    ws_.mark_[u] = stamp;
                    reached.push_back(u);
                }
            }
        }
        std::sort(reached.begin(), reached.end());
        return reached;
    }

private:
    const Graph* g_;
    SamplerSpec spec_;
    detail::SampleWorkspace ws_;
};

inline HyperEdge sample_bwc(const Graph& g, Rng& rng) {
    return Sampler(g, {SamplerKind::betweenness}).draw(rng);
}

inline HyperEdge sample_coverage(const Graph& g, Rng& rng) {
    return Sampler(g, {SamplerKind::coverage}).draw(rng);
}

inline HyperEdge sample_kpath(const Graph& g, unsigned kappa, Rng& rng) {
    return Sampler(g, {SamplerKind::kpath, kappa}).draw(rng);
}

inline HyperEdge sample_rr(const Graph& g, double p, Rng& rng) {
    return Sampler(g, {SamplerKind::rr_influence, 2, p}).draw(rng);
}

/// One hyper-edge per line, node ids space-separated; an empty line is an empty hyper-edge.
inline void write_hyperedges(std::ostream& out, const std::vector<HyperEdge>& edges) {
    for (const auto& h : edges) {
        for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << h[i];
        out << '\n';
    }
}

inline std::vector<HyperEdge> read_hyperedges(std::istream& in) {
    std::vector<HyperEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream fields(line);
        HyperEdge h;
        std::string tok;
        while (fields >> tok) {
            std::size_t used = 0;
            unsigned long long id = 0;
            try {
                id = std::stoull(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || id >= kNoNode) throw ParseError("bad node id '" + tok + "'", line_no);
            h.push_back(static_cast<NodeId>(id));
        }
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
        edges.push_back(std::move(h));
    }
    return edges;
}

}  // namespace hedge
