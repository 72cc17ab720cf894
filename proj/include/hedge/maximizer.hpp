#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hedge/graph.hpp"
#include "hedge/sampling.hpp"

namespace hedge {

/**
 * A fixed sample of hyper-edges with a node-to-edge incidence index.
 *
 * Membership and incidence are both stored in CSR form. Empty hyper-edges
 * are kept: they count towards |H| in every estimate.
 */
class HyperEdgePool {
public:
    HyperEdgePool() = default;

    HyperEdgePool(std::size_t num_nodes, const std::vector<HyperEdge>& edges) : num_nodes_(num_nodes) {
        edge_offsets_.reserve(edges.size() + 1);
        edge_offsets_.push_back(0);
        std::vector<std::size_t> counts(num_nodes + 1, 0);
        for (const auto& h : edges) {
            for (NodeId v : h) {
                if (v >= num_nodes) throw std::invalid_argument("hyper-edge member out of range");
                members_.push_back(v);
                ++counts[v + 1];
            }
            edge_offsets_.push_back(members_.size());
        }
        for (std::size_t i = 0; i < num_nodes; ++i) counts[i + 1] += counts[i];
        node_offsets_ = counts;
        incidence_.resize(members_.size());
        for (std::size_t e = 0; e + 1 < edge_offsets_.size(); ++e)
            for (std::size_t i = edge_offsets_[e]; i < edge_offsets_[e + 1]; ++i)
                incidence_[counts[members_[i]]++] = static_cast<std::uint32_t>(e);
    }

    std::size_t num_nodes() const noexcept { return num_nodes_; }
    std::size_t size() const noexcept { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const NodeId> edge(std::size_t e) const {
        return {members_.data() + edge_offsets_[e], members_.data() + edge_offsets_[e + 1]};
    }

    /// Indices of the edges containing v.
    std::span<const std::uint32_t> incident(NodeId v) const {
        return {incidence_.data() + node_offsets_[v], incidence_.data() + node_offsets_[v + 1]};
    }

    std::size_t degree(NodeId v) const { return node_offsets_[v + 1] - node_offsets_[v]; }

    std::vector<HyperEdge> edges() const {
        std::vector<HyperEdge> result;
        result.reserve(size());
        for (std::size_t e = 0; e < size(); ++e) {
            auto h = edge(e);
            result.emplace_back(h.begin(), h.end());
        }
        return result;
    }

private:
    std::size_t num_nodes_ = 0;
    std::vector<std::size_t> edge_offsets_;
    std::vector<NodeId> members_;
    std::vector<std::size_t> node_offsets_;
    std::vector<std::uint32_t> incidence_;
};

struct RunResult {
    std::vector<NodeId> selected;
    std::vector<std::size_t> marginal_degrees;
    /// B_H of each selected prefix, alpha * covered / |H|.
    std::vector<double> estimated_centrality;
    std::size_t sample_count = 0;
    double alpha = 0.0;
    double wall_time = 0.0;
};

/// Sample count ceil(3 (ell + k) ln(n) / (eps^2 * maxk_scaled)), with MAX_k = maxk_scaled * alpha.
inline std::size_t sample_budget(std::size_t n, std::size_t k, double eps, std::size_t ell, double maxk_scaled) {
    if (n < 2) throw std::invalid_argument("sample_budget: need n >= 2");
    if (!(eps > 0.0)) throw std::invalid_argument("sample_budget: eps must be positive");
    if (!(maxk_scaled > 0.0 && maxk_scaled <= 1.0)) throw std::invalid_argument("sample_budget: maxk_scaled must lie in (0, 1]");
    if (k < 1 || ell < 1) throw std::invalid_argument("sample_budget: k and ell must be positive");
    const double q = 3.0 * static_cast<double>(ell + k) * std::log(static_cast<double>(n)) / (eps * eps * maxk_scaled);
    return static_cast<std::size_t>(std::ceil(q));
}

/// Experimental budget k ln(n) / eps^2.
inline std::size_t paper_exp_budget(std::size_t n, std::size_t k, double eps) {
    if (n < 2 || !(eps > 0.0)) throw std::invalid_argument("paper_exp_budget: need n >= 2 and eps > 0");
    return static_cast<std::size_t>(std::ceil(static_cast<double>(k) * std::log(static_cast<double>(n)) / (eps * eps)));
}

/// Equal-budget comparison size 2 ln(2 n^3) / eps^2.
inline std::size_t equal_yalg_budget(std::size_t n, double eps) {
    if (n < 2 || !(eps > 0.0)) throw std::invalid_argument("equal_yalg_budget: need n >= 2 and eps > 0");
    const double nn = static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(2.0 * (std::log(2.0) + 3.0 * std::log(nn)) / (eps * eps)));
}

/// Ordering budget 100 ln(n) / eps^2.
inline std::size_t ordering_budget(std::size_t n, double eps) {
    if (n < 2 || !(eps > 0.0)) throw std::invalid_argument("ordering_budget: need n >= 2 and eps > 0");
    return static_cast<std::size_t>(std::ceil(100.0 * std::log(static_cast<double>(n)) / (eps * eps)));
}

inline HyperEdgePool build_pool(const Graph& g, const SamplerSpec& spec, std::size_t q, Rng& rng) {
    if (q < 1) throw std::invalid_argument("build_pool: q must be positive");
    Sampler sampler(g, spec);
    std::vector<HyperEdge> edges;
    edges.reserve(q);
    for (std::size_t i = 0; i < q; ++i) edges.push_back(sampler.draw(rng));
    return HyperEdgePool(g.num_nodes(), edges);
}

/// Independent stream for one worker of a seeded run.
inline Rng worker_stream(std::uint64_t seed, std::size_t worker) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32)};
    return Rng(seq);
}

/**
 * Parallel pool construction. Worker w owns stream worker_stream(seed, w)
 * and draws a contiguous block; blocks are concatenated in worker order, so
 * the pool depends only on (seed, workers).
 */
inline HyperEdgePool build_pool(const Graph& g, const SamplerSpec& spec, std::size_t q, std::uint64_t seed,
                                std::size_t workers) {
    if (q < 1) throw std::invalid_argument("build_pool: q must be positive");
    if (workers < 1) throw std::invalid_argument("build_pool: need at least one worker");
    Sampler probe(g, spec);  // validates the spec before threads start
    std::vector<std::vector<HyperEdge>> blocks(workers);
    auto work = [&](std::size_t w) {
        const std::size_t count = q / workers + (w < q % workers ? 1 : 0);
        Rng rng = worker_stream(seed, w);
        Sampler sampler(g, spec);
        blocks[w].reserve(count);
        for (std::size_t i = 0; i < count; ++i) blocks[w].push_back(sampler.draw(rng));
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }
    std::vector<HyperEdge> edges;
    edges.reserve(q);
    for (auto& b : blocks)
        for (auto& h : b) edges.push_back(std::move(h));
    return HyperEdgePool(g.num_nodes(), edges);
}

/**
 * Greedy maximum coverage over the pool.
 *
 * Each round picks the node hitting the most still-uncovered edges (ties to
 * the smaller id) and retires those edges. Degrees are maintained exactly;
 * the heap is refreshed lazily, so the total cost is O(sum |h| + n log n).
 */
inline RunResult greedy_cover(const HyperEdgePool& pool, std::size_t k, double alpha = 1.0) {
    const auto n = pool.num_nodes();
    if (k < 1) throw std::invalid_argument("greedy_cover: k must be positive");
    if (k > n) throw std::invalid_argument("greedy_cover: k exceeds node count");

    std::vector<std::size_t> deg(n);
    for (NodeId v = 0; v < n; ++v) deg[v] = pool.degree(v);
    std::vector<char> alive(pool.size(), 1);
    std::vector<char> chosen(n, 0);

    struct Entry {
        std::size_t deg;
        NodeId node;
        bool operator<(const Entry& o) const { return deg != o.deg ? deg < o.deg : node > o.node; }
    };
    std::vector<Entry> init;
    init.reserve(n);
    for (NodeId v = 0; v < n; ++v) init.push_back({deg[v], v});
    std::priority_queue<Entry> heap(std::less<Entry>{}, std::move(init));

    RunResult result;
    result.sample_count = pool.size();
    result.alpha = alpha;
    std::size_t covered = 0;
    while (result.selected.size() < k) {
        Entry top = heap.top();
        heap.pop();
        if (chosen[top.node]) continue;
        if (top.deg != deg[top.node]) {
            heap.push({deg[top.node], top.node});
            continue;
        }
        const NodeId u = top.node;
        chosen[u] = 1;
        result.selected.push_back(u);
        result.marginal_degrees.push_back(deg[u]);
        for (auto e : pool.incident(u)) {
            if (!alive[e]) continue;
            alive[e] = 0;
            ++covered;
            for (NodeId w : pool.edge(e)) --deg[w];
        }
        result.estimated_centrality.push_back(
            pool.empty() ? 0.0 : alpha * static_cast<double>(covered) / static_cast<double>(pool.size()));
    }
    return result;
}

/// B_H(S) = alpha * |{h : h meets S}| / |H|.
inline double estimate_centrality(const HyperEdgePool& pool, std::span<const NodeId> nodes, double alpha) {
    if (pool.empty()) throw std::invalid_argument("estimate_centrality: empty pool");
    std::vector<char> hit(pool.size(), 0);
    std::size_t count = 0;
    for (NodeId v : nodes) {
        if (v >= pool.num_nodes()) throw std::invalid_argument("estimate_centrality: node out of range");
        for (auto e : pool.incident(v))
            if (!hit[e]) {
                hit[e] = 1;
                ++count;
            }
    }
    return alpha * static_cast<double>(count) / static_cast<double>(pool.size());
}

struct HedgeParams {
    std::size_t k = 1;
    double eps = 0.1;
    std::size_t ell = 1;
    double maxk_scaled = 1.0;
};

/// Full pipeline with the theory budget q(G, eps/2).
inline RunResult hedge(const Graph& g, const SamplerSpec& spec, const HedgeParams& params, Rng& rng) {
    const auto start = std::chrono::steady_clock::now();
    const auto q = sample_budget(g.num_nodes(), params.k, params.eps / 2.0, params.ell, params.maxk_scaled);
    auto pool = build_pool(g, spec, q, rng);
    auto result = greedy_cover(pool, params.k, alpha(spec, g));
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// Pipeline with an explicit sample count.
inline RunResult hedge_with_budget(const Graph& g, const SamplerSpec& spec, std::size_t k, std::size_t q, Rng& rng) {
    const auto start = std::chrono::steady_clock::now();
    auto pool = build_pool(g, spec, q, rng);
    auto result = greedy_cover(pool, k, alpha(spec, g));
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace hedge
