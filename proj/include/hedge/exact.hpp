#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "hedge/connectivity.hpp"
#include "hedge/graph.hpp"
#include "hedge/maximizer.hpp"
#include "hedge/shortest_paths.hpp"

namespace hedge {

/// Compensated (Neumaier) summation.
class KahanSum {
public:
    void add(long double x) {
        long double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0;
    long double comp_ = 0;
};

/// Per-node betweenness B(v) over ordered pairs.
using CentralityVector = std::vector<double>;

/// Greedy pick order with the exact centrality of every prefix.
struct GreedyTrace {
    std::vector<NodeId> selected;
    std::vector<double> centrality;
};

namespace detail {

inline std::vector<char> membership(std::size_t n, std::span<const NodeId> nodes) {
    std::vector<char> in(n, 0);
    for (NodeId v : nodes) {
        if (v >= n) throw std::invalid_argument("node id out of range");
        in[v] = 1;
    }
    return in;
}

/// Shortest s-v paths whose internal nodes avoid the marked set.
template <typename Count>
void avoidance_counts(const ShortestPathDAG& dag, const std::vector<char>& in_set, std::vector<Count>& tau) {
    tau.assign(dag.dist.size(), Count(0));
    tau[dag.source] = 1;
    for (std::size_t i = 1; i < dag.order.size(); ++i) {
        NodeId v = dag.order[i];
        Count acc = 0;
        for (NodeId u : dag.preds(v))
            if (u == dag.source || !in_set[u]) acc += tau[u];
        tau[v] = std::move(acc);
    }
}

/// Sum over targets of 1 - tau(t)/sigma(t) for one source.
inline long double source_set_bwc(const ShortestPathDAG& dag, const std::vector<char>& in_set) {
    return std::visit(
        [&](const auto& sigma) {
            using Count = typename std::decay_t<decltype(sigma)>::value_type;
            std::vector<Count> tau;
            avoidance_counts(dag, in_set, tau);
            KahanSum sum;
            for (std::size_t i = 1; i < dag.order.size(); ++i) {
                NodeId t = dag.order[i];
                if (tau[t] != sigma[t]) sum.add(1.0L - count_ratio(tau[t], sigma[t]));
            }
            return sum.value();
        },
        dag.sigma);
}

}  // namespace detail

/// Brandes dependency accumulation.
inline CentralityVector brandes(const Graph& g) {
    const auto n = g.num_nodes();
    std::vector<KahanSum> acc(n);
    std::vector<long double> delta(n);
    for (NodeId s = 0; s < n; ++s) {
        auto dag = bfs_dag(g, s);
        std::visit(
            [&](const auto& sigma) {
                for (NodeId v : dag.order) delta[v] = 0;
                for (std::size_t i = dag.order.size(); i-- > 1;) {
                    NodeId w = dag.order[i];
                    const long double coeff = (1.0L + delta[w]) / to_real(sigma[w]);
                    for (NodeId v : dag.preds(w)) delta[v] += to_real(sigma[v]) * coeff;
                    acc[w].add(delta[w]);
                }
            },
            dag.sigma);
    }
    CentralityVector result(n);
    for (NodeId v = 0; v < n; ++v) result[v] = static_cast<double>(acc[v].value());
    return result;
}

/// Shortest-path DAGs from every source.
inline std::vector<ShortestPathDAG> all_dags(const Graph& g) {
    std::vector<ShortestPathDAG> dags;
    dags.reserve(g.num_nodes());
    for (NodeId s = 0; s < g.num_nodes(); ++s) dags.push_back(bfs_dag(g, s));
    return dags;
}

/// Exact B(S) from precomputed per-source DAGs.
inline double set_bwc(std::span<const ShortestPathDAG> dags, std::span<const NodeId> nodes) {
    const auto in_set = detail::membership(dags.size(), nodes);
    if (nodes.empty()) return 0.0;
    KahanSum total;
    for (const auto& dag : dags) total.add(detail::source_set_bwc(dag, in_set));
    return static_cast<double>(total.value());
}

/// Exact B(S) = sum over ordered pairs of the fraction of shortest paths with an internal node in S.
inline double set_bwc(const Graph& g, std::span<const NodeId> nodes) {
    const auto in_set = detail::membership(g.num_nodes(), nodes);
    if (nodes.empty()) return 0.0;
    KahanSum total;
    for (NodeId s = 0; s < g.num_nodes(); ++s) total.add(detail::source_set_bwc(bfs_dag(g, s), in_set));
    return static_cast<double>(total.value());
}

/// B(u | S) = B(S + u) - B(S).
inline double adaptive_bwc(const Graph& g, NodeId u, std::span<const NodeId> nodes) {
    if (u >= g.num_nodes()) throw std::invalid_argument("adaptive_bwc: node out of range");
    if (std::find(nodes.begin(), nodes.end(), u) != nodes.end())
        throw std::invalid_argument("adaptive_bwc: u already in S");
    std::vector<NodeId> extended(nodes.begin(), nodes.end());
    extended.push_back(u);
    return set_bwc(g, extended) - set_bwc(g, nodes);
}

/**
 * B(u | S) for every node at once (0 for members of S).
 *
 * Per source, tau counts S-avoiding prefixes and dep(v) accumulates
 * sum_t rho_v(t) / sigma(t) over S-avoiding suffixes, so the contribution
 * of u is tau(u) * dep(u). O(n m) overall.
 */
inline std::vector<double> adaptive_bwc_all(const Graph& g, std::span<const NodeId> nodes) {
    const auto n = g.num_nodes();
    const auto in_set = detail::membership(n, nodes);
    std::vector<KahanSum> acc(n);
    std::vector<long double> dep(n);
    for (NodeId s = 0; s < n; ++s) {
        auto dag = bfs_dag(g, s);
        std::visit(
            [&](const auto& sigma) {
                using Count = typename std::decay_t<decltype(sigma)>::value_type;
                std::vector<Count> tau;
                detail::avoidance_counts(dag, in_set, tau);
                for (NodeId v : dag.order) dep[v] = 0;
                for (std::size_t i = dag.order.size(); i-- > 1;) {
                    NodeId w = dag.order[i];
                    const long double through = 1.0L / to_real(sigma[w]) + (in_set[w] ? 0.0L : dep[w]);
                    for (NodeId v : dag.preds(w)) dep[v] += through;
                    if (!in_set[w]) acc[w].add(to_real(tau[w]) * dep[w]);
                }
            },
            dag.sigma);
    }
    std::vector<double> result(n);
    for (NodeId v = 0; v < n; ++v) result[v] = in_set[v] ? 0.0 : static_cast<double>(acc[v].value());
    return result;
}

namespace detail {

/// Index of the largest value among candidates; near-ties (relative 1e-12) go to the smallest id.
inline NodeId argmax_with_ties(const std::vector<double>& values, const std::vector<char>& excluded) {
    NodeId best = kNoNode;
    for (NodeId v = 0; v < values.size(); ++v) {
        if (excluded[v]) continue;
        if (best == kNoNode) {
            best = v;
            continue;
        }
        const double tol = 1e-12 * std::max({1.0, std::fabs(values[v]), std::fabs(values[best])});
        if (values[v] > values[best] + tol) best = v;
    }
    return best;
}

}  // namespace detail

/// Classic greedy on exact adaptive betweenness.
inline GreedyTrace ex_greedy(const Graph& g, std::size_t k) {
    const auto n = g.num_nodes();
    if (k > n) throw std::invalid_argument("ex_greedy: k exceeds node count");
    GreedyTrace trace;
    std::vector<char> chosen(n, 0);
    KahanSum value;
    for (std::size_t round = 0; round < k; ++round) {
        auto marginal = adaptive_bwc_all(g, trace.selected);
        NodeId u = detail::argmax_with_ties(marginal, chosen);
        chosen[u] = 1;
        trace.selected.push_back(u);
        value.add(marginal[u]);
        trace.centrality.push_back(static_cast<double>(value.value()));
    }
    return trace;
}

struct SubsetOptimum {
    std::vector<NodeId> nodes;
    double value = 0.0;
};

inline double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

/// Exhaustive MAX_k; refuses when C(n, k) exceeds max_subsets.
inline SubsetOptimum brute_force_max(const Graph& g, std::size_t k, double max_subsets = 1e7) {
    const auto n = g.num_nodes();
    if (k > n) throw std::invalid_argument("brute_force_max: k exceeds node count");
    if (binomial(n, k) > max_subsets) throw SizeError("brute_force_max: too many subsets");
    SubsetOptimum best;
    if (k == 0) return best;
    const auto dags = all_dags(g);
    std::vector<NodeId> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<NodeId>(i);
    best.nodes = subset;
    best.value = set_bwc(dags, subset);
    while (true) {
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        const double value = set_bwc(dags, subset);
        if (value > best.value + 1e-9 * std::max(1.0, best.value)) {
            best.value = value;
            best.nodes = subset;
        }
    }
    return best;
}

/// Ordered pairs (s, t) with some shortest path having an internal node in S.
inline double exact_coverage(const Graph& g, std::span<const NodeId> nodes) {
    const auto n = g.num_nodes();
    const auto in_set = detail::membership(n, nodes);
    std::vector<char> covered(n);
    std::size_t count = 0;
    std::vector<std::uint32_t> dist;
    std::vector<NodeId> order;
    for (NodeId s = 0; s < n; ++s) {
        detail::bfs_levels(g, s, dist, order);
        for (NodeId v : order) covered[v] = 0;
        for (std::size_t i = 1; i < order.size(); ++i) {
            NodeId v = order[i];
            for (NodeId u : g.in(v)) {
                if (dist[u] == kUnreachable || dist[u] + 1 != dist[v]) continue;
                if (covered[u] || (u != s && in_set[u])) {
                    covered[v] = 1;
                    break;
                }
            }
            count += covered[v];
        }
    }
    return static_cast<double>(count);
}

/// Expected number of start nodes whose random simple walk of length kappa meets S.
inline double exact_kpath(const Graph& g, std::span<const NodeId> nodes, unsigned kappa, std::size_t max_nodes = 12) {
    const auto n = g.num_nodes();
    if (n > max_nodes) throw SizeError("exact_kpath: graph too large for walk enumeration");
    const auto in_set = detail::membership(n, nodes);
    std::vector<char> visited(n, 0);
    KahanSum total;
    std::function<void(NodeId, unsigned, long double, bool)> walk = [&](NodeId v, unsigned steps, long double prob,
                                                                       bool hit) {
        std::vector<NodeId> next;
        if (steps < kappa)
            for (NodeId w : g.out(v))
                if (!visited[w]) next.push_back(w);
        if (next.empty()) {
            if (hit) total.add(prob);
            return;
        }
        const long double share = prob / static_cast<long double>(next.size());
        for (NodeId w : next) {
            visited[w] = 1;
            walk(w, steps + 1, share, hit || in_set[w]);
            visited[w] = 0;
        }
    };
    for (NodeId s = 0; s < n; ++s) {
        visited[s] = 1;
        walk(s, 0, 1.0L, in_set[s] != 0);
        visited[s] = 0;
    }
    return static_cast<double>(total.value());
}

/// Greedy on new triangles covered; centrality holds the triangle count of each prefix.
inline GreedyTrace triangle_greedy(const Graph& g, std::size_t k) {
    const auto n = g.num_nodes();
    if (k > n) throw std::invalid_argument("triangle_greedy: k exceeds node count");
    GreedyTrace trace;
    if (k == 0) return trace;
    auto triangles = list_triangles(g);
    std::vector<HyperEdge> edges;
    edges.reserve(triangles.size());
    for (const auto& tri : triangles) edges.push_back({tri[0], tri[1], tri[2]});
    HyperEdgePool pool(n, edges);
    auto run = greedy_cover(pool, k, static_cast<double>(edges.size()));
    trace.selected = std::move(run.selected);
    std::size_t covered = 0;
    for (auto d : run.marginal_degrees) {
        covered += d;
        trace.centrality.push_back(static_cast<double>(covered));
    }
    return trace;
}

}  // namespace hedge
