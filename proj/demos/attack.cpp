// Largest-component curves for several removal orders on a Kronecker graph.
//
//   demo_attack [levels] [cap]

#include <cstdlib>
#include <iostream>

#include "hedge/hedge.hpp"

int main(int argc, char** argv) {
    const unsigned levels = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 10;
    const std::size_t cap = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 50;

    hedge::Rng rng(7);
    const auto g = hedge::gen_kronecker({}, levels, rng);
    std::cout << "# kronecker 2^" << levels << ": " << g.num_nodes() << " nodes, " << g.num_edges() << " edges\n";

    const auto by_bwc = hedge::centrality_ordering(g, {hedge::SamplerKind::betweenness}, 0.25, rng);
    const auto by_cov = hedge::centrality_ordering(g, {hedge::SamplerKind::coverage}, 0.25, rng);
    const auto by_tri = hedge::triangle_ordering(g);

    const auto a = hedge::attack_curve(g, by_bwc, cap);
    const auto b = hedge::attack_curve(g, by_cov, cap);
    const auto c = hedge::attack_curve(g, by_tri, cap);
    std::cout << "removed,betweenness,coverage,triangle\n";
    for (std::size_t i = 0; i < a.lcc.size(); ++i)
        std::cout << i << ',' << a.lcc[i] << ',' << b.lcc[i] << ',' << c.lcc[i] << '\n';
}
