// Compare HEDGE against exact greedy on a random Apollonian network.
//
//   demo_top_k [n] [k] [eps]

#include <cstdlib>
#include <iostream>

#include "hedge/hedge.hpp"

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 500;
    const std::size_t k = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 5;
    const double eps = argc > 3 ? std::strtod(argv[3], nullptr) : 0.1;

    hedge::Rng rng(2024);
    const auto g = hedge::gen_ran(n, rng);
    const double a = static_cast<double>(n) * static_cast<double>(n - 1);
    std::cout << "RAN graph: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges\n";

    const auto q = hedge::paper_exp_budget(n, k, eps);
    auto approx = hedge::hedge_with_budget(g, {hedge::SamplerKind::betweenness}, k, q, rng);
    const double approx_exact = hedge::set_bwc(g, approx.selected);

    const auto trace = hedge::ex_greedy(g, k);

    std::cout << "HEDGE (" << q << " samples):";
    for (auto v : approx.selected) std::cout << ' ' << v;
    std::cout << "\n  estimated " << hedge::format_real(approx.estimated_centrality.back() / a) << ", exact "
              << hedge::format_real(approx_exact / a) << ", " << hedge::format_real(approx.wall_time) << " s\n";
    std::cout << "exact greedy:";
    for (auto v : trace.selected) std::cout << ' ' << v;
    std::cout << "\n  exact " << hedge::format_real(trace.centrality.back() / a) << '\n';
}
