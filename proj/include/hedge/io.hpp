#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hedge/exact.hpp"
#include "hedge/experiments.hpp"
#include "hedge/graph.hpp"
#include "hedge/maximizer.hpp"

namespace hedge {

/// Nine significant digits.
inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

/// x rounded to nine significant digits, so JSON dumps print at most that many.
inline double round9(double x) { return std::stod(format_real(x)); }

/// RunResult as JSON with original labels and centralities scaled by 1/alpha.
inline nlohmann::ordered_json run_result_json(const RunResult& r, const Graph& g, bool with_timing) {
    nlohmann::ordered_json j;
    auto& selected = j["selected"] = nlohmann::ordered_json::array();
    for (NodeId v : r.selected) selected.push_back(g.label(v));
    j["marginal_degrees"] = r.marginal_degrees;
    auto& scaled = j["scaled_centrality"] = nlohmann::ordered_json::array();
    for (double b : r.estimated_centrality) scaled.push_back(round9(r.alpha > 0 ? b / r.alpha : 0.0));
    j["sample_count"] = r.sample_count;
    j["alpha"] = round9(r.alpha);
    if (with_timing) j["wall_time_seconds"] = round9(r.wall_time);
    return j;
}

inline void write_centrality_csv(std::ostream& out, const Graph& g, const CentralityVector& values, double alpha) {
    out << "node,score,scaled_score\n";
    for (NodeId v = 0; v < values.size(); ++v)
        out << g.label(v) << ',' << format_real(values[v]) << ',' << format_real(alpha > 0 ? values[v] / alpha : 0.0)
            << '\n';
}

/// One row per greedy round: the pick and the exact centrality of the prefix.
inline void write_trace_csv(std::ostream& out, const Graph& g, const GreedyTrace& trace, double alpha) {
    out << "round,node,set_score,scaled_set_score\n";
    for (std::size_t i = 0; i < trace.selected.size(); ++i)
        out << i + 1 << ',' << g.label(trace.selected[i]) << ',' << format_real(trace.centrality[i]) << ','
            << format_real(alpha > 0 ? trace.centrality[i] / alpha : 0.0) << '\n';
}

inline void write_attack_csv(std::ostream& out, const AttackCurve& curve) {
    out << "removed,lcc_size\n";
    for (std::size_t i = 0; i < curve.lcc.size(); ++i) out << i << ',' << curve.lcc[i] << '\n';
}

inline void write_evolution_csv(std::ostream& out, const EvolutionSeries& series) {
    out << "t,n,m,avg_deg,k,scaled_centrality\n";
    for (const auto& r : series)
        out << r.t << ',' << r.n << ',' << r.m << ',' << format_real(r.avg_deg) << ',' << r.k << ','
            << format_real(r.scaled_centrality) << '\n';
}

struct InfluenceRow {
    std::string method;
    std::size_t k = 0;
    double spread = 0.0;
};

inline void write_influence_csv(std::ostream& out, const std::vector<InfluenceRow>& rows) {
    out << "method,k,spread\n";
    for (const auto& r : rows) out << r.method << ',' << r.k << ',' << format_real(r.spread) << '\n';
}

}  // namespace hedge
