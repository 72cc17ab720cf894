#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <vector>

#include "hedge/graph.hpp"

namespace hedge {

/// Disjoint sets with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Merges the sets of a and b and returns the size of the merged set.
    std::size_t unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return size_[a];
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return size_[a];
    }

    std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Largest weakly connected component after deleting `removed`.
inline std::size_t largest_component_size(const Graph& g, std::span<const NodeId> removed) {
    const auto n = g.num_nodes();
    std::vector<char> gone(n, 0);
    for (NodeId v : removed) gone.at(v) = 1;
    UnionFind uf(n);
    std::size_t best = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (gone[u]) continue;
        best = std::max<std::size_t>(best, 1);
        for (NodeId v : g.out(u))
            if (!gone[v]) best = std::max(best, uf.unite(u, v));
    }
    return best;
}

/// Triangles through v in the undirected view of g.
inline std::size_t incident_triangles(const Graph& g, NodeId v) {
    if (g.directed()) return incident_triangles(g.symmetrized(), v);
    std::size_t count = 0;
    auto adj_v = g.out(v);
    for (NodeId u : adj_v) {
        // each adjacent neighbour pair {u, w} is counted once, from its smaller end
        auto adj_u = g.out(u);
        auto a = std::upper_bound(adj_v.begin(), adj_v.end(), u);
        auto b = std::upper_bound(adj_u.begin(), adj_u.end(), u);
        while (a != adj_v.end() && b != adj_u.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++count;
                ++a;
                ++b;
            }
        }
    }
    return count;
}

/// Every triangle {a, b, c} with a < b < c in the undirected view of g.
inline std::vector<std::array<NodeId, 3>> list_triangles(const Graph& g) {
    if (g.directed()) return list_triangles(g.symmetrized());
    std::vector<std::array<NodeId, 3>> result;
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
        auto adj_a = g.out(a);
        for (auto it = std::upper_bound(adj_a.begin(), adj_a.end(), a); it != adj_a.end(); ++it) {
            NodeId b = *it;
            auto adj_b = g.out(b);
            auto x = std::next(it);
            auto y = std::upper_bound(adj_b.begin(), adj_b.end(), b);
            while (x != adj_a.end() && y != adj_b.end()) {
                if (*x < *y) {
                    ++x;
                } else if (*y < *x) {
                    ++y;
                } else {
                    result.push_back({a, b, *x});
                    ++x;
                    ++y;
                }
            }
        }
    }
    return result;
}

}  // namespace hedge
