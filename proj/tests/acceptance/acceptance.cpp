// Acceptance checks: one PASS / FAIL / SKIP line per criterion. Exit status is
// nonzero when a criterion fails that is not listed as known unattainable.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <numeric>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hedge/hedge.hpp"
#include "../oracles.hpp"

using namespace hedge;
using Nodes = std::vector<NodeId>;

namespace {

int failures = 0;
int known_failures = 0;

// Criteria that cannot hold as stated, with the reason printed next to the FAIL line.
const std::map<int, std::string> kKnownUnattainable{
    {5, "coverage(origin) = 3^r - 2^(r+1) + 1 exactly, so the ratio is 12/64 at r=3 and 50/256 at r=4"},
};

void report(int id, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail;
    if (!pass) {
        if (auto it = kKnownUnattainable.find(id); it != kKnownUnattainable.end()) {
            std::cout << " [known unattainable: " << it->second << "]";
            ++known_failures;
        } else {
            ++failures;
        }
    }
    std::cout << std::endl;
}

void skip(int id, const std::string& detail) { std::cout << "SKIP criterion " << id << ": " << detail << std::endl; }

std::string fmt(double x) { return format_real(x); }

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Nodes random_subset(std::size_t n, std::size_t max_size, Rng& rng) {
    Nodes all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const auto size = std::uniform_int_distribution<std::size_t>(1, std::min(max_size, n))(rng);
    return Nodes(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
}

/// Random graph with n in [lo, hi]; a third are directed.
Graph random_test_graph(std::size_t lo, std::size_t hi, int index, Rng& rng) {
    const auto n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    if (index % 3 == 2) return oracle::random_graph(n, 3.0 / static_cast<double>(n), true, rng);
    return oracle::random_connected(n, n / 2, rng);
}

std::optional<std::filesystem::path> ca_grqc_path() {
    if (const char* env = std::getenv("HEDGE_CA_GRQC"); env && *env) return std::filesystem::path(env);
    const auto local = std::filesystem::path(HEDGE_SOURCE_DIR) / "data" / "ca-GrQc.txt";
    if (std::filesystem::exists(local)) return local;
    return std::nullopt;
}

// ---------------------------------------------------------------- 1

void criterion_1() {
    struct Kind {
        std::string name;
        SamplerSpec spec;
        std::size_t max_n;
        std::function<double(const Graph&, const Nodes&)> exact;
    };
    const std::vector<Kind> kinds{
        {"betweenness", {SamplerKind::betweenness}, 64, [](const Graph& g, const Nodes& s) { return set_bwc(g, s); }},
        {"coverage", {SamplerKind::coverage}, 64, [](const Graph& g, const Nodes& s) { return exact_coverage(g, s); }},
        {"kpath", {SamplerKind::kpath, 2}, 12, [](const Graph& g, const Nodes& s) { return exact_kpath(g, s, 2); }},
    };
    const std::size_t draws = 200000;
    bool all_pass = true;
    std::ostringstream detail;
    for (const auto& kind : kinds) {
        Rng rng(1000);
        std::size_t good = 0, total = 0;
        for (int gi = 0; gi < 20; ++gi) {
            const auto g = random_test_graph(std::min<std::size_t>(6, kind.max_n), kind.max_n, gi, rng);
            std::vector<Nodes> sets;
            for (int i = 0; i < 10; ++i) sets.push_back(random_subset(g.num_nodes(), 5, rng));
            std::vector<std::vector<char>> member(sets.size(), std::vector<char>(g.num_nodes(), 0));
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (NodeId v : sets[i]) member[i][v] = 1;
            std::vector<std::size_t> hits(sets.size(), 0);
            Sampler sampler(g, kind.spec);
            for (std::size_t d = 0; d < draws; ++d) {
                const auto h = sampler.draw(rng);
                for (std::size_t i = 0; i < sets.size(); ++i)
                    hits[i] += std::any_of(h.begin(), h.end(), [&](NodeId v) { return member[i][v] != 0; });
            }
            const double a = alpha(kind.spec, g);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                const double p = kind.exact(g, sets[i]) / a;
                const double freq = static_cast<double>(hits[i]) / static_cast<double>(draws);
                good += std::fabs(freq - p) <= 4.0 * std::sqrt(p * (1 - p) / static_cast<double>(draws)) + 1e-12;
                ++total;
            }
        }
        const bool pass = static_cast<double>(good) >= 0.99 * static_cast<double>(total);
        all_pass = all_pass && pass;
        detail << kind.name << " " << good << "/" << total << "; ";
    }
    report(1, all_pass, "sampler hit rates within 4 sigma of exact centrality: " + detail.str() + "need >= 99%");
}

// ---------------------------------------------------------------- 2

void criterion_2() {
    Rng rng(2000);
    double worst = 0;
    for (int gi = 0; gi < 50; ++gi) {
        const auto g = random_test_graph(2, 100, gi, rng);
        const auto b = brandes(g);
        const auto dags = all_dags(g);
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            const NodeId single[] = {v};
            worst = std::max(worst, std::fabs(b[v] - set_bwc(dags, single)));
        }
    }

    // Enumeration oracle: every (s, t) pair's path count and S-hitting count must agree as integers,
    // and the totals as exact rationals rounded to double.
    using boost::multiprecision::cpp_rational;
    std::size_t mismatched_counts = 0, mismatched_totals = 0;
    for (int gi = 0; gi < 50; ++gi) {
        const auto g = random_test_graph(2, 10, gi, rng);
        const auto s = random_subset(g.num_nodes(), 4, rng);
        const auto in_set = [&] {
            std::vector<char> m(g.num_nodes(), 0);
            for (NodeId v : s) m[v] = 1;
            return m;
        }();
        const auto a = oracle::adjacency(g);
        const auto d = oracle::all_pairs(a);
        cpp_rational total = 0;
        for (NodeId src = 0; src < g.num_nodes(); ++src) {
            const auto dag = bfs_dag(g, src);
            std::vector<std::uint64_t> tau;
            detail::avoidance_counts(dag, in_set, tau);
            for (NodeId t = 0; t < g.num_nodes(); ++t) {
                const auto paths = oracle::shortest_paths(a, d, src, t);
                if (paths.empty()) continue;
                std::size_t hit = 0;
                for (const auto& p : paths)
                    hit += std::any_of(p.begin() + 1, p.end() - 1, [&](NodeId v) { return in_set[v] != 0; });
                const auto sigma = std::get<0>(dag.sigma)[t];
                mismatched_counts += sigma != paths.size() || sigma - tau[t] != hit;
                total += cpp_rational(hit, paths.size());
            }
        }
        mismatched_totals += set_bwc(g, s) != static_cast<double>(total);
    }
    report(2, worst <= 1e-9 && mismatched_counts == 0 && mismatched_totals == 0,
           "max |brandes(v) - set_bwc({v})| = " + fmt(worst) + " over 50 graphs (n <= 100); enumeration mismatches: " +
               std::to_string(mismatched_counts) + " pair counts, " + std::to_string(mismatched_totals) +
               " totals over 50 graphs (n <= 10)");
}

// ---------------------------------------------------------------- 3

void criterion_3() {
    Rng rng(3000);
    const double eps = 0.2;
    const double factor = 1.0 - 1.0 / std::exp(1.0) - eps;
    int graphs_ok = 0, graphs = 0;
    std::size_t worst_successes = 20;
    while (graphs < 20) {
        const auto g = random_test_graph(5, 16, graphs, rng);
        const std::size_t k = 1 + static_cast<std::size_t>(graphs % 3);
        const auto best = brute_force_max(g, k);
        if (best.value <= 0) continue;  // MAX_k = 0 admits no budget
        ++graphs;
        const SamplerSpec spec{SamplerKind::betweenness};
        const double maxk_scaled = best.value / alpha(spec, g);
        std::size_t successes = 0;
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            Rng trial_rng(3000 + 100 * static_cast<std::uint64_t>(graphs) + trial);
            const auto r = hedge::hedge(g, spec, {k, eps, 1, maxk_scaled}, trial_rng);
            successes += set_bwc(g, r.selected) >= factor * best.value - 1e-9;
        }
        worst_successes = std::min(worst_successes, successes);
        graphs_ok += successes >= 19;  // 95% of 20
    }
    report(3, graphs_ok == 20,
           std::to_string(graphs_ok) + "/20 graphs with >= 95% of trials achieving B(S) >= (1-1/e-eps) MAX_k; worst " +
               std::to_string(worst_successes) + "/20");
}

// ---------------------------------------------------------------- 4

void criterion_4() {
    const auto path = ca_grqc_path();
    if (!path) {
        skip(4, "ca-GrQc not found (set HEDGE_CA_GRQC or place data/ca-GrQc.txt)");
        return;
    }
    const auto g = load_edge_list(path->string(), false);
    const auto n = g.num_nodes();
    const double a = static_cast<double>(n) * static_cast<double>(n - 1);
    const std::size_t k = 10;
    const double eps = 0.1;

    auto start = std::chrono::steady_clock::now();
    const auto trace = ex_greedy(g, k);
    const double exgreedy_time = seconds_since(start);
    const double exgreedy_scaled = trace.centrality.back() / a;

    double sum = 0, hedge_time = 0;
    const auto q = paper_exp_budget(n, k, eps);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(4000 + seed);
        start = std::chrono::steady_clock::now();
        const auto r = hedge_with_budget(g, {SamplerKind::betweenness}, k, q, rng);
        hedge_time += seconds_since(start);
        sum += set_bwc(g, r.selected) / a;
    }
    const double hedge_scaled = sum / 10;
    const double hedge_mean_time = hedge_time / 10;
    const bool pass = std::fabs(exgreedy_scaled - 0.242) <= 0.005 && std::fabs(hedge_scaled - 0.241) <= 0.02 &&
                      hedge_mean_time < exgreedy_time;
    report(4, pass,
           "ca-GrQc n=" + std::to_string(n) + ": EX-GREEDY " + fmt(exgreedy_scaled) + " in " + fmt(exgreedy_time) +
               " s; HEDGE (" + std::to_string(q) + " samples) mean " + fmt(hedge_scaled) + " in " + fmt(hedge_mean_time) +
               " s per run");
}

// ---------------------------------------------------------------- 5

void criterion_5() {
    bool decreasing = true, counts_ok = true, coverage_ok = true;
    double previous = std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    for (unsigned r = 3; r <= 7; ++r) {
        const auto g = gen_hypercube(r);
        const double n = static_cast<double>(g.num_nodes());
        const Nodes origin{0};
        const double cov = exact_coverage(g, origin);
        const double ratio = cov / (n * n);
        decreasing = decreasing && ratio < previous;
        previous = ratio;
        coverage_ok = coverage_ok && cov == std::pow(3.0, r) - std::pow(2.0, r + 1) + 1;

        // ordered pairs (a, b), endpoints included, with a shortest a-b path through the origin
        const auto from_origin = bfs_dag(g, 0);
        std::uint64_t through = 0;
        for (NodeId x = 0; x < g.num_nodes(); ++x) {
            const auto from_x = bfs_dag(g, x);
            for (NodeId y = 0; y < g.num_nodes(); ++y)
                through += from_x.dist[0] + from_origin.dist[y] == from_x.dist[y];
        }
        std::uint64_t three = 1;
        for (unsigned i = 0; i < r; ++i) three *= 3;
        counts_ok = counts_ok && through == three;
        detail << "r=" << r << " " << fmt(ratio) << "; ";
    }
    report(5, decreasing && counts_ok && coverage_ok,
           "coverage(origin)/n^2: " + detail.str() + (counts_ok ? "pair counts = 3^r" : "pair counts differ from 3^r"));
}

// ---------------------------------------------------------------- 6

void criterion_6() {
    std::ostringstream detail;
    std::vector<double> means;
    for (std::size_t n : {128, 256, 512, 1024}) {
        double sum = 0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng(6000 + seed);
            const auto g = gen_ran(n, rng);
            const auto b = brandes(g);
            sum += *std::max_element(b.begin(), b.end()) / (static_cast<double>(n) * static_cast<double>(n - 1));
        }
        means.push_back(sum / 5);
        detail << "n=" << n << " " << fmt(means.back()) << "; ";
    }
    report(6, means.back() >= 0.5 * means.front(), "mean scaled MAX_1 of RAN: " + detail.str() + "need n=1024 >= 0.5 x n=128");
}

// ---------------------------------------------------------------- 7

void criterion_7() {
    const auto inst = gen_lower_bound(10000, 0.5);
    Sampler sampler(inst.graph, {SamplerKind::betweenness});
    Rng rng(7000);
    const std::size_t draws = 100000;
    std::size_t nonempty = 0;
    for (std::size_t i = 0; i < draws; ++i) nonempty += !sampler.draw(rng).empty();
    const double freq = static_cast<double>(nonempty) / static_cast<double>(draws);
    const double p_block = inst.pair_in_block_probability();
    const double p_far = inst.nonempty_probability();
    const bool within_4sigma = std::fabs(freq - p_far) <= 4.0 * std::sqrt(p_far * (1 - p_far) / static_cast<double>(draws));
    report(7, std::fabs(freq - p_block) <= 0.01,
           "A = " + std::to_string(inst.rows) + "x" + std::to_string(inst.cols) + ", nonempty fraction " + fmt(freq) +
               " vs pair-in-A probability " + fmt(p_block) + " (tolerance 0.01); exact nonempty probability " +
               fmt(p_far) + (within_4sigma ? " within" : " NOT within") + " 4 sigma");
}

// ---------------------------------------------------------------- 8

void criterion_8() {
    bool counts_ok = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(8000 + seed);
        RanGenerator ran;
        while (ran.num_nodes() < 500) {
            ran.step(rng);
            const auto t = ran.num_nodes();
            counts_ok = counts_ok && ran.num_edges() == 3 * t - 6 && ran.num_active_faces() == 2 * t - 5;
        }
        counts_ok = counts_ok && ran.graph().num_edges() == 3 * ran.num_nodes() - 6;
    }
    double spread = 0;
    for (unsigned r = 1; r <= 6; ++r) {
        const auto b = brandes(gen_hypercube(r));
        const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
        spread = std::max(spread, *hi - *lo);
    }
    report(8, counts_ok && spread <= 1e-9,
           std::string("RAN e_t = 3t-6, f_t = 2t-5 for 100 seeds up to t=500: ") + (counts_ok ? "exact" : "violated") +
               "; hypercube r<=6 max brandes spread " + fmt(spread));
}

// ---------------------------------------------------------------- 9

void criterion_9() {
    Rng rng(9000);
    int matches = 0;
    for (int gi = 0; gi < 20; ++gi) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 200)(rng);
        const auto g = oracle::random_graph(n, 1.5 / static_cast<double>(n), gi % 2 == 1, rng);
        Nodes order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        matches += attack_curve(g, order, n).lcc == oracle::naive_attack(g, order, n);
    }
    report(9, matches == 20, std::to_string(matches) + "/20 attack curves equal naive recomputation (n <= 200, cap = n)");
}

// ---------------------------------------------------------------- 10

void criterion_10() {
    Rng rng(10000);
    bool extremes = true;
    for (int gi = 0; gi < 10; ++gi) {
        const auto g = oracle::random_graph(30, 0.05, gi % 2 == 0, rng);
        const auto seeds = random_subset(30, 4, rng);
        std::vector<char> reach(30, 0);
        const auto a = oracle::adjacency(g);
        for (NodeId s : seeds) {
            const auto d = oracle::bfs(a, s);
            for (NodeId v = 0; v < 30; ++v) reach[v] |= d[v] != oracle::kInf;
        }
        const double reachable = static_cast<double>(std::count(reach.begin(), reach.end(), 1));
        extremes = extremes && ic_spread(g, seeds, 0.0, 100, rng).mean == static_cast<double>(seeds.size()) &&
                   ic_spread(g, seeds, 1.0, 100, rng).mean == reachable;
    }
    const auto star = oracle::make(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}, true);
    const bool center = ris_influence_max(star, 1, 1000, 1.0, rng) == Nodes{0};
    const bool base = extremes && center;

    const auto path = ca_grqc_path();
    if (!path) {
        report(10, base,
               std::string("ic_spread p in {0,1} ") + (extremes ? "exact" : "WRONG") + "; RIS star pick " +
                   (center ? "center" : "WRONG") + "; ca-GrQc substitute SKIPPED (dataset absent)");
        return;
    }
    const auto g = load_edge_list(path->string(), false);
    Rng order_rng(10001);
    const auto order = centrality_ordering(g, {SamplerKind::betweenness}, 0.25, order_rng);
    bool ordering_holds = true;
    std::ostringstream detail;
    for (std::size_t k : {10, 50, 100}) {
        Rng im_rng(10002);
        const auto im = ris_influence_max(g, k, 100000, 0.01, im_rng);
        const Nodes betw(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
        Rng c1(10003), c2(10003);
        const auto s_im = ic_spread(g, im, 0.01, 10000, c1);
        const auto s_bw = ic_spread(g, betw, 0.01, 10000, c2);
        ordering_holds = ordering_holds && s_im.mean >= s_bw.mean - 2 * s_bw.std_error;
        detail << "k=" << k << " IM " << fmt(s_im.mean) << " betw " << fmt(s_bw.mean) << "; ";
    }
    report(10, base && ordering_holds,
           std::string("ic_spread extremes ") + (extremes ? "exact" : "WRONG") + "; RIS star " + (center ? "center" : "WRONG") +
               "; ca-GrQc " + detail.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<void()>>> checks{
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},  {5, criterion_5},
        {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}, {10, criterion_10},
    };
    for (const auto& [id, check] : checks) {
        try {
            check();
        } catch (const std::exception& e) {
            report(id, false, std::string("exception: ") + e.what());
        }
    }
    std::cout << "summary: " << failures << " unexpected failure(s), " << known_failures << " known unattainable" << std::endl;
    return failures == 0 ? 0 : 1;
}
