#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hedge/graph.hpp"

namespace hedge {

/// Arbitrary-precision path count used when 64-bit counts overflow.
using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Adds x into acc; returns false on overflow (never for BigCount).
inline bool checked_add(std::uint64_t& acc, std::uint64_t x) noexcept {
    return !__builtin_add_overflow(acc, x, &acc);
}

inline bool checked_add(BigCount& acc, const BigCount& x) {
    acc += x;
    return true;
}

inline long double to_real(std::uint64_t x) noexcept { return static_cast<long double>(x); }
inline long double to_real(const BigCount& x) { return x.convert_to<long double>(); }

/// Exact ratio num/den of two path counts with num <= den.
inline long double count_ratio(std::uint64_t num, std::uint64_t den) noexcept {
    return static_cast<long double>(num) / static_cast<long double>(den);
}

inline long double count_ratio(const BigCount& num, const BigCount& den) {
    return to_real(num) / to_real(den);
}

/**
 * Single-source shortest-path DAG of an unweighted graph.
 *
 * sigma holds 64-bit counts when they fit and arbitrary-precision counts
 * otherwise. Predecessor lists are stored in CSR form indexed by node.
 */
struct ShortestPathDAG {
    NodeId source = 0;
    std::vector<std::uint32_t> dist;
    std::variant<std::vector<std::uint64_t>, std::vector<BigCount>> sigma;
    std::vector<std::size_t> pred_offsets;
    std::vector<NodeId> pred_list;
    std::vector<NodeId> order;

    bool reachable(NodeId v) const { return dist[v] != kUnreachable; }

    std::span<const NodeId> preds(NodeId v) const {
        return {pred_list.data() + pred_offsets[v], pred_list.data() + pred_offsets[v + 1]};
    }

    bool big() const noexcept { return sigma.index() == 1; }

    /// Path count at v as an arbitrary-precision integer.
    BigCount sigma_at(NodeId v) const {
        return std::visit([v](const auto& s) { return BigCount(s[v]); }, sigma);
    }
};

namespace detail {

/// Forward BFS from s recording distance and visit order.
inline void bfs_levels(const Graph& g, NodeId s, std::vector<std::uint32_t>& dist, std::vector<NodeId>& order) {
    dist.assign(g.num_nodes(), kUnreachable);
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId v = order[head];
        for (NodeId w : g.out(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
        }
    }
}

/// Path counts along the BFS order; returns false if a 64-bit count overflowed.
template <typename Count>
bool count_paths(const ShortestPathDAG& dag, std::vector<Count>& sigma) {
    sigma.assign(dag.dist.size(), Count(0));
    sigma[dag.source] = 1;
    for (std::size_t i = 1; i < dag.order.size(); ++i) {
        NodeId v = dag.order[i];
        Count acc = 0;
        for (NodeId u : dag.preds(v))
            if (!checked_add(acc, sigma[u])) return false;
        sigma[v] = std::move(acc);
    }
    return true;
}

}  // namespace detail

/// BFS shortest-path DAG from s: distances, exact path counts, predecessors.
inline ShortestPathDAG bfs_dag(const Graph& g, NodeId s) {
    if (s >= g.num_nodes()) throw std::invalid_argument("bfs_dag: source out of range");
    ShortestPathDAG dag;
    dag.source = s;
    detail::bfs_levels(g, s, dag.dist, dag.order);

    const auto n = g.num_nodes();
    dag.pred_offsets.assign(n + 1, 0);
    for (NodeId v : dag.order) {
        if (v == s) continue;
        for (NodeId u : g.in(v))
            if (dag.dist[u] != kUnreachable && dag.dist[u] + 1 == dag.dist[v]) ++dag.pred_offsets[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) dag.pred_offsets[i + 1] += dag.pred_offsets[i];
    dag.pred_list.resize(dag.pred_offsets[n]);
    {
        std::vector<std::size_t> cursor(dag.pred_offsets.begin(), dag.pred_offsets.end() - 1);
        for (NodeId v : dag.order) {
            if (v == s) continue;
            for (NodeId u : g.in(v))
                if (dag.dist[u] != kUnreachable && dag.dist[u] + 1 == dag.dist[v]) dag.pred_list[cursor[v]++] = u;
        }
    }

    std::vector<std::uint64_t> small;
    if (detail::count_paths(dag, small)) {
        dag.sigma = std::move(small);
    } else {
        std::vector<BigCount> big;
        detail::count_paths(dag, big);
        dag.sigma = std::move(big);
    }
    return dag;
}

}  // namespace hedge
