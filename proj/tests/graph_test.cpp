#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hedge/connectivity.hpp"
#include "hedge/graph.hpp"
#include "hedge/shortest_paths.hpp"
#include "oracles.hpp"

using namespace hedge;

namespace {

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("hedge_graph_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::vector<NodeId> nodes(std::initializer_list<NodeId> l) { return l; }

}  // namespace

TEST(LoadEdgeList, PathGraph) {
    TempFile f("0 1\n1 2\n");
    auto g = load_edge_list(f.path(), false);
    EXPECT_EQ(g.num_nodes(), 3u);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(LoadEdgeList, DropsDuplicatesAndSelfLoops) {
    TempFile f("0 1\n0 1\n1 1\n");
    auto g = load_edge_list(f.path(), false);
    EXPECT_EQ(g.num_nodes(), 2u);
    EXPECT_EQ(g.num_edges(), 1u);
    EXPECT_EQ(g.out_degree(1), 1u);
}

TEST(LoadEdgeList, RemapsLabelsDensely) {
    TempFile f("7 9\n9 20\n");
    auto g = load_edge_list(f.path(), false);
    ASSERT_EQ(g.num_nodes(), 3u);
    EXPECT_EQ(g.labels(), (std::vector<Label>{7, 9, 20}));
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(LoadEdgeList, CommentsThirdColumnAndWhitespace) {
    TempFile f("# header\n\n0\t1 99\n  1   2\n% konect comment\n");
    auto g = load_edge_list(f.path(), true);
    EXPECT_EQ(g.num_nodes(), 3u);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_FALSE(g.has_edge(1, 0));
    EXPECT_EQ(g.in(1).size(), 1u);
}

TEST(LoadEdgeList, MalformedLineNamesLineNumber) {
    TempFile f("0 1\n1 x\n");
    try {
        load_edge_list(f.path(), false);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    TempFile g("0\n");
    EXPECT_THROW(load_edge_list(g.path(), false), ParseError);
}

TEST(LoadEdgeList, EmptyFileAndMissingFile) {
    TempFile f("");
    EXPECT_EQ(load_edge_list(f.path(), false).num_nodes(), 0u);
    EXPECT_THROW(load_edge_list("/nonexistent/hedge/file.txt", false), IoError);
}

TEST(LoadTemporal, SortsByTimeIncludingNegative) {
    TempFile f("1 2 3\n0 1 -5\n");
    auto list = load_temporal_edge_list(f.path());
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list[0].t, -5);
    EXPECT_EQ(list[1].t, 3);
}

TEST(LoadTemporal, EmptyAndStable) {
    TempFile empty("");
    EXPECT_TRUE(load_temporal_edge_list(empty.path()).empty());
    TempFile f("0 1 3\n2 3 3\n0 1 3\n");
    auto list = load_temporal_edge_list(f.path());
    ASSERT_EQ(list.size(), 3u);  // duplicates retained
    EXPECT_EQ(list[0], (TemporalEdge{0, 1, 3}));
    EXPECT_EQ(list[1], (TemporalEdge{2, 3, 3}));
}

TEST(LoadTemporal, MissingTimestampIsParseError) {
    TempFile f("0 1 4\n1 2\n");
    EXPECT_THROW(load_temporal_edge_list(f.path()), ParseError);
}

TEST(BfsDag, PathGraph) {
    auto dag = bfs_dag(oracle::path(4), 0);
    EXPECT_EQ(dag.dist, (std::vector<std::uint32_t>{0, 1, 2, 3}));
    for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(dag.sigma_at(v), 1);
}

TEST(BfsDag, CycleAntipodeHasTwoPaths) {
    auto g = oracle::cycle(4);
    auto a = oracle::adjacency(g);
    auto d = oracle::all_pairs(a);
    const auto enumerated = oracle::shortest_paths(a, d, 0, 2).size();
    ASSERT_EQ(enumerated, 2u);
    auto dag = bfs_dag(g, 0);
    EXPECT_EQ(dag.sigma_at(2), enumerated);
    EXPECT_EQ(dag.preds(2).size(), 2u);
}

TEST(BfsDag, DisconnectedTarget) {
    auto g = oracle::make(2, {});
    auto dag = bfs_dag(g, 0);
    EXPECT_FALSE(dag.reachable(1));
    EXPECT_EQ(dag.dist[1], kUnreachable);
    EXPECT_EQ(dag.sigma_at(1), 0);
}

TEST(BfsDag, SourceOutOfRange) { EXPECT_THROW(bfs_dag(oracle::path(3), 3), std::invalid_argument); }

TEST(BfsDag, OverflowEscalatesToBigCounts) {
    // 70 diamonds in series: 2^70 shortest paths end to end.
    std::vector<std::pair<NodeId, NodeId>> e;
    NodeId next = 1;
    NodeId hub = 0;
    for (int i = 0; i < 70; ++i) {
        NodeId a = next++, b = next++, c = next++;
        e.insert(e.end(), {{hub, a}, {hub, b}, {a, c}, {b, c}});
        hub = c;
    }
    auto g = oracle::make(next, e);
    auto dag = bfs_dag(g, 0);
    ASSERT_TRUE(dag.big());
    EXPECT_EQ(dag.sigma_at(hub), BigCount(1) << 70);
}

TEST(BfsDag, MatchesNaiveBfsAndSigmaIdentity) {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 99;
        const bool directed = trial % 3 == 0;
        auto g = oracle::random_graph(n, 3.0 / static_cast<double>(n), directed, rng);
        auto a = oracle::adjacency(g);
        for (NodeId s = 0; s < n; s += 7) {
            auto dag = bfs_dag(g, s);
            auto naive = oracle::bfs(a, s);
            for (NodeId v = 0; v < n; ++v) {
                if (naive[v] == oracle::kInf) {
                    EXPECT_FALSE(dag.reachable(v));
                    continue;
                }
                ASSERT_EQ(dag.dist[v], static_cast<std::uint32_t>(naive[v]));
                if (v == s) {
                    EXPECT_EQ(dag.sigma_at(v), 1);
                    continue;
                }
                BigCount sum = 0;
                for (NodeId u : dag.preds(v)) {
                    EXPECT_TRUE(a[u][v]);
                    EXPECT_EQ(dag.dist[u] + 1, dag.dist[v]);
                    sum += dag.sigma_at(u);
                }
                EXPECT_EQ(sum, dag.sigma_at(v));
                // every DAG-qualifying in-neighbour is listed
                std::size_t expected_preds = 0;
                for (NodeId u = 0; u < n; ++u)
                    if (a[u][v] && naive[u] != oracle::kInf && naive[u] + 1 == naive[v]) ++expected_preds;
                EXPECT_EQ(dag.preds(v).size(), expected_preds);
            }
        }
    }
}

TEST(LargestComponent, Examples) {
    EXPECT_EQ(largest_component_size(oracle::path(4), nodes({1})), 2u);
    EXPECT_EQ(largest_component_size(oracle::complete(4), {}), 4u);
    EXPECT_EQ(largest_component_size(oracle::star(3), nodes({0})), 1u);
    EXPECT_EQ(largest_component_size(oracle::path(2), nodes({0, 1})), 0u);
}

TEST(LargestComponent, DirectedUsesWeakConnectivity) {
    auto g = oracle::make(3, {{0, 1}, {2, 1}}, true);
    EXPECT_EQ(largest_component_size(g, {}), 3u);
}

TEST(LargestComponent, MatchesNaiveDfs) {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial * 3;
        auto g = oracle::random_graph(n, 1.5 / static_cast<double>(n), trial % 2 == 0, rng);
        EXPECT_EQ(largest_component_size(g, {}), oracle::largest_component(g, {}));
    }
}

TEST(Triangles, Examples) {
    EXPECT_EQ(incident_triangles(oracle::complete(3), 0), 1u);
    for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(incident_triangles(oracle::complete(4), v), 3u);
    auto tree = oracle::star(5);
    for (NodeId v = 0; v < 6; ++v) EXPECT_EQ(incident_triangles(tree, v), 0u);
}

TEST(Triangles, MatchesBruteForce) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + trial * 2;  // up to 43
        auto g = oracle::random_graph(n, 0.3, trial % 4 == 0, rng);
        std::size_t sum = 0;
        for (NodeId v = 0; v < n; ++v) {
            const auto c = incident_triangles(g, v);
            EXPECT_EQ(c, oracle::triangles_at(g, v));
            sum += c;
        }
        EXPECT_EQ(sum, 3 * list_triangles(g).size());
    }
}

TEST(EdgeListWriter, RoundTripsThroughLoader) {
    auto g = Graph::from_edges(3, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}}, false, {10, 20, 30});
    std::ostringstream out;
    write_edge_list(out, g, {"generator test"});
    std::istringstream in(out.str());
    auto back = parse_edge_list(in, false);
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(back.edge_list(), g.edge_list());
}
