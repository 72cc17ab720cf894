#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hedge/graph.hpp"
#include "hedge/sampling.hpp"

namespace hedge {

/// 2x2 matrix of edge probabilities, row-major: {p00, p01, p10, p11}.
struct KroneckerSeed {
    std::array<double, 4> p{0.9, 0.5, 0.5, 0.2};

    double at(unsigned row, unsigned col) const { return p[2 * row + col]; }

    void validate() const {
        for (double x : p)
            if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("Kronecker seed entries must lie in [0, 1]");
    }
};

enum class KroneckerMethod { automatic, exact, ball_dropping };

/// Pair probability prod_b seed[u_b][v_b] over the `levels` low bits.
inline double kronecker_pair_probability(const KroneckerSeed& seed, unsigned levels, std::uint64_t u, std::uint64_t v) {
    double prob = 1.0;
    for (unsigned b = 0; b < levels && prob > 0.0; ++b) prob *= seed.at((u >> b) & 1U, (v >> b) & 1U);
    return prob;
}

/// Expected edge count sum_{u<v} P(u, v) of the exact model.
inline double kronecker_expected_edges(const KroneckerSeed& seed, unsigned levels) {
    // Adding a high bit: u < v iff the new bits are (0, 1), or they agree and the low parts satisfy u < v.
    double below = 0.0;
    double all = 1.0;
    for (unsigned b = 0; b < levels; ++b) {
        below = seed.at(0, 1) * all + (seed.at(0, 0) + seed.at(1, 1)) * below;
        all *= seed.p[0] + seed.p[1] + seed.p[2] + seed.p[3];
    }
    return below;
}

/**
 * Stochastic Kronecker graph on 2^levels nodes.
 *
 * The exact method flips one coin per pair u < v. Ball dropping draws a
 * Poisson number of balls with the total ordered-pair mass and descends the
 * seed matrix once per level; balls landing on u >= v are discarded and
 * repeats merge.
 */
inline Graph gen_kronecker(const KroneckerSeed& seed, unsigned levels, Rng& rng,
                           KroneckerMethod method = KroneckerMethod::automatic) {
    if (levels < 1 || levels > 24) throw std::invalid_argument("gen_kronecker: levels must lie in [1, 24]");
    seed.validate();
    const std::uint64_t n = std::uint64_t{1} << levels;
    if (method == KroneckerMethod::automatic)
        method = levels <= 12 ? KroneckerMethod::exact : KroneckerMethod::ball_dropping;

    std::vector<std::pair<NodeId, NodeId>> edges;
    if (method == KroneckerMethod::exact) {
        if (levels > 16) throw std::invalid_argument("gen_kronecker: exact method limited to 16 levels");
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (std::uint64_t u = 0; u < n; ++u)
            for (std::uint64_t v = u + 1; v < n; ++v) {
                const double prob = kronecker_pair_probability(seed, levels, u, v);
                if (prob > 0.0 && coin(rng) < prob) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            }
    } else {
        const double total = std::pow(seed.p[0] + seed.p[1] + seed.p[2] + seed.p[3], levels);
        if (total > 0.0) {
            const auto balls = std::poisson_distribution<std::uint64_t>(total)(rng);
            std::discrete_distribution<unsigned> quadrant(seed.p.begin(), seed.p.end());
            edges.reserve(static_cast<std::size_t>(balls / 2 + 1));
            for (std::uint64_t i = 0; i < balls; ++i) {
                std::uint64_t u = 0, v = 0;
                for (unsigned b = 0; b < levels; ++b) {
                    const unsigned q = quadrant(rng);
                    u |= std::uint64_t{q >> 1} << b;
                    v |= std::uint64_t{q & 1U} << b;
                }
                if (u < v) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            }
        }
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges, false);
}

/**
 * Random Apollonian network grown one node at a time.
 *
 * Active faces live in a flat vector; the chosen face is overwritten by one
 * of its three children and the other two are appended, so sampling a face
 * is O(1).
 */
class RanGenerator {
public:
    RanGenerator() : nodes_(3), faces_{{0, 1, 2}}, edges_{{0, 1}, {0, 2}, {1, 2}} {}

    /// Inserts the next node into a uniformly chosen active face.
    void step(Rng& rng) {
        const auto pick = std::uniform_int_distribution<std::size_t>(0, faces_.size() - 1)(rng);
        const auto [a, b, c] = faces_[pick];
        const auto t = static_cast<NodeId>(nodes_++);
        edges_.push_back({a, t});
        edges_.push_back({b, t});
        edges_.push_back({c, t});
        faces_[pick] = {a, b, t};
        faces_.push_back({a, c, t});
        faces_.push_back({b, c, t});
    }

    std::size_t num_nodes() const noexcept { return nodes_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::size_t num_active_faces() const noexcept { return faces_.size(); }
    const std::vector<std::array<NodeId, 3>>& faces() const noexcept { return faces_; }

    Graph graph() const { return Graph::from_edges(nodes_, edges_, false); }

private:
    std::size_t nodes_;
    std::vector<std::array<NodeId, 3>> faces_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

inline Graph gen_ran(std::size_t n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("gen_ran: need n >= 3");
    RanGenerator ran;
    while (ran.num_nodes() < n) ran.step(rng);
    return ran.graph();
}

/// Hypercube Q_r; node ids are the bitstrings.
inline Graph gen_hypercube(unsigned r) {
    if (r < 1 || r > 16) throw std::invalid_argument("gen_hypercube: r must lie in [1, 16]");
    const std::size_t n = std::size_t{1} << r;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(r * n / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (unsigned b = 0; b < r; ++b) {
            const std::size_t v = u ^ (std::size_t{1} << b);
            if (u < v) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    return Graph::from_edges(n, edges, false);
}

/// Rook-graph block A (rows x cols) padded with isolated nodes to n nodes.
struct LowerBoundInstance {
    Graph graph;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t isolated = 0;

    std::size_t block_size() const noexcept { return rows * cols; }

    /// Probability that a uniform ordered pair of distinct nodes lies inside A.
    double pair_in_block_probability() const {
        const double a = static_cast<double>(block_size());
        const double n = static_cast<double>(graph.num_nodes());
        return a * (a - 1.0) / (n * (n - 1.0));
    }

    /// Probability that a betweenness draw is nonempty (pair in A at distance 2).
    double nonempty_probability() const {
        const double n = static_cast<double>(graph.num_nodes());
        const double far = static_cast<double>(block_size()) * static_cast<double>(rows - 1) * static_cast<double>(cols - 1);
        return far / (n * (n - 1.0));
    }
};

inline LowerBoundInstance gen_lower_bound(std::size_t n, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("gen_lower_bound: eps must lie in (0, 1)");
    const double root = std::sqrt(static_cast<double>(n));
    LowerBoundInstance inst;
    inst.rows = static_cast<std::size_t>(std::floor(eps * root + 1e-9));
    inst.cols = static_cast<std::size_t>(std::floor(root + 1e-9));
    if (inst.rows < 2 || inst.cols < 2 || inst.block_size() > n)
        throw std::invalid_argument("gen_lower_bound: degenerate dimensions (need eps * sqrt(n) >= 2)");
    inst.isolated = n - inst.block_size();
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<NodeId>(i * inst.cols + j); };
    for (std::size_t i = 0; i < inst.rows; ++i)
        for (std::size_t j = 0; j < inst.cols; ++j) {
            for (std::size_t j2 = j + 1; j2 < inst.cols; ++j2) edges.emplace_back(id(i, j), id(i, j2));
            for (std::size_t i2 = i + 1; i2 < inst.rows; ++i2) edges.emplace_back(id(i, j), id(i2, j));
        }
    inst.graph = Graph::from_edges(n, edges, false);
    return inst;
}

}  // namespace hedge
