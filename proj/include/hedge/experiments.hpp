#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hedge/connectivity.hpp"
#include "hedge/exact.hpp"
#include "hedge/generators.hpp"
#include "hedge/graph.hpp"
#include "hedge/maximizer.hpp"
#include "hedge/sampling.hpp"

namespace hedge {

/// Full pick order of HEDGE over a pool of ceil(100 ln(n) / eps^2) hyper-edges.
inline std::vector<NodeId> centrality_ordering(const Graph& g, const SamplerSpec& spec, double eps, Rng& rng) {
    if (g.num_nodes() < 2) throw std::invalid_argument("centrality_ordering: need n >= 2");
    auto pool = build_pool(g, spec, ordering_budget(g.num_nodes(), eps), rng);
    return greedy_cover(pool, g.num_nodes(), alpha(spec, g)).selected;
}

/// Full pick order of the exact triangle greedy.
inline std::vector<NodeId> triangle_ordering(const Graph& g) { return triangle_greedy(g, g.num_nodes()).selected; }

/// lcc[i] is the largest weak component size after removing the first i nodes of the ordering.
struct AttackCurve {
    std::vector<std::size_t> lcc;
};

/// Offline decremental connectivity: re-insert the removed prefix backwards into a union-find.
inline AttackCurve attack_curve(const Graph& g, std::span<const NodeId> ordering, std::size_t cap) {
    const auto n = g.num_nodes();
    cap = std::min(cap, ordering.size());
    if (cap > n) throw std::invalid_argument("attack_curve: cap exceeds node count");
    std::vector<char> present(n, 1);
    for (std::size_t i = 0; i < cap; ++i) {
        if (ordering[i] >= n) throw std::invalid_argument("attack_curve: node out of range");
        if (!present[ordering[i]]) throw std::invalid_argument("attack_curve: repeated node in ordering");
        present[ordering[i]] = 0;
    }
    UnionFind uf(n);
    std::size_t best = 0;
    auto insert_edges = [&](NodeId u) {
        best = std::max<std::size_t>(best, uf.size_of(u));
        for (NodeId v : g.out(u))
            if (present[v]) best = std::max(best, uf.unite(u, v));
        if (g.directed())
            for (NodeId v : g.in(u))
                if (present[v]) best = std::max(best, uf.unite(u, v));
    };
    for (NodeId u = 0; u < n; ++u)
        if (present[u]) insert_edges(u);
    AttackCurve curve;
    curve.lcc.assign(cap + 1, 0);
    curve.lcc[cap] = best;
    for (std::size_t i = cap; i-- > 0;) {
        const NodeId u = ordering[i];
        present[u] = 1;
        insert_edges(u);
        curve.lcc[i] = best;
    }
    return curve;
}

struct SpreadEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo expected cascade size under Independent Cascade with edge probability p.
inline SpreadEstimate ic_spread(const Graph& g, std::span<const NodeId> seeds, double p, std::size_t runs, Rng& rng) {
    if (runs < 1) throw std::invalid_argument("ic_spread: runs must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ic_spread: p must lie in [0, 1]");
    const auto n = g.num_nodes();
    std::vector<std::uint32_t> mark(n, 0);
    std::vector<NodeId> active;
    std::bernoulli_distribution live(p);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t run = 1; run <= runs; ++run) {
        const auto stamp = static_cast<std::uint32_t>(run);
        active.clear();
        for (NodeId s : seeds) {
            if (s >= n) throw std::invalid_argument("ic_spread: seed out of range");
            if (mark[s] != stamp) {
                mark[s] = stamp;
                active.push_back(s);
            }
        }
        for (std::size_t head = 0; head < active.size(); ++head) {
            const NodeId u = active[head];
            for (NodeId v : g.out(u)) {
                if (mark[v] == stamp) continue;
                if (live(rng)) {
                    mark[v] = stamp;
                    active.push_back(v);
                }
            }
        }
        const double size = static_cast<double>(active.size());
        sum += size;
        sum_sq += size * size;
    }
    const double r = static_cast<double>(runs);
    SpreadEstimate est;
    est.mean = sum / r;
    const double var = runs > 1 ? std::max(0.0, (sum_sq - r * est.mean * est.mean) / (r - 1.0)) : 0.0;
    est.std_error = std::sqrt(var / r);
    return est;
}

/// Seed set from greedy coverage over reverse-reachable sets.
inline std::vector<NodeId> ris_influence_max(const Graph& g, std::size_t k, std::size_t num_rr, double p, Rng& rng) {
    auto pool = build_pool(g, {SamplerKind::rr_influence, 2, p}, num_rr, rng);
    return greedy_cover(pool, k, static_cast<double>(g.num_nodes())).selected;
}

enum class SnapshotMode {
    cumulative,  // every edge with t <= T
    exact,       // only edges stamped exactly T (deletions between snapshots are honoured)
};

struct EvolutionRow {
    std::int64_t t = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    double avg_deg = 0.0;
    std::size_t k = 0;
    double scaled_centrality = 0.0;
};

using EvolutionSeries = std::vector<EvolutionRow>;

/// One row per k for a single graph: scaled B_H of the first k greedy picks.
inline std::vector<EvolutionRow> centrality_rows(const Graph& g, std::int64_t t, std::span<const std::size_t> ks,
                                                 const SamplerSpec& spec, double eps, Rng& rng) {
    std::vector<EvolutionRow> rows;
    const auto n = g.num_nodes();
    const auto m = g.num_edges();
    const double avg = n == 0 ? 0.0 : (g.directed() ? 1.0 : 2.0) * static_cast<double>(m) / static_cast<double>(n);
    std::vector<double> prefix;
    if (n >= 2 && !ks.empty()) {
        const std::size_t kmax = std::min(n, *std::max_element(ks.begin(), ks.end()));
        auto pool = build_pool(g, spec, ordering_budget(n, eps), rng);
        const double a = alpha(spec, g);
        auto run = greedy_cover(pool, kmax, a);
        for (double b : run.estimated_centrality) prefix.push_back(b / a);
    }
    for (auto k : ks) {
        EvolutionRow row{t, n, m, avg, k, 0.0};
        if (!prefix.empty()) row.scaled_centrality = prefix[std::min(k, prefix.size()) - 1];
        rows.push_back(row);
    }
    return rows;
}

/// Centrality of the top-k sets over a sequence of temporal snapshots.
inline EvolutionSeries evolve(const TemporalEdgeList& temporal, std::span<const std::int64_t> snapshots,
                              std::span<const std::size_t> ks, const SamplerSpec& spec, double eps, Rng& rng,
                              SnapshotMode mode = SnapshotMode::cumulative, bool directed = false) {
    if (!std::is_sorted(snapshots.begin(), snapshots.end()))
        throw std::invalid_argument("evolve: snapshots must be sorted");
    EvolutionSeries series;
    for (auto t : snapshots) {
        TemporalEdgeList slice;
        for (const auto& e : temporal) {
            if (e.t > t) break;
            if (mode == SnapshotMode::cumulative || e.t == t) slice.push_back(e);
        }
        auto g = graph_from_labelled_edges(slice, directed);
        auto rows = centrality_rows(g, t, ks, spec, eps, rng);
        series.insert(series.end(), rows.begin(), rows.end());
    }
    return series;
}

/// `count` snapshot times at equally spaced quantiles of the timestamps; the last is the final time.
inline std::vector<std::int64_t> snapshot_quantiles(const TemporalEdgeList& temporal, std::size_t count) {
    std::vector<std::int64_t> times;
    if (temporal.empty() || count == 0) return times;
    for (std::size_t i = 1; i <= count; ++i) {
        const auto idx = (temporal.size() * i + count - 1) / count - 1;
        times.push_back(temporal[idx].t);
    }
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

/// Kronecker graphs on 2^i nodes for i in [first, last], treated as a time series with t = i.
inline EvolutionSeries kronecker_series(const KroneckerSeed& seed, unsigned first, unsigned last,
                                        std::span<const std::size_t> ks, const SamplerSpec& spec, double eps, Rng& rng) {
    EvolutionSeries series;
    for (unsigned i = first; i <= last; ++i) {
        auto g = gen_kronecker(seed, i, rng);
        auto rows = centrality_rows(g, static_cast<std::int64_t>(i), ks, spec, eps, rng);
        series.insert(series.end(), rows.begin(), rows.end());
    }
    return series;
}

}  // namespace hedge
