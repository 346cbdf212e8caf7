#include <doctest.h>

#include <algorithm>

#include "oracle_helpers.hpp"
#include "topobench/graph.hpp"
#include "topobench/rng.hpp"

using namespace topobench;

TEST_CASE("parse_edge_list basic") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.nodes() == std::vector<NodeId>{0, 1, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_edge_list collapses undirected duplicates") {
    Graph g = parse_edge_list("0 1\n1 0");
    CHECK(g.nodes() == std::vector<NodeId>{0, 1});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_edge_list rejects self-loops") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 3"),
                         doctest::Contains("self-loop"), std::runtime_error);
}

TEST_CASE("parse_edge_list reports the offending line") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n2 x"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("1 2 3"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), std::runtime_error);
}

TEST_CASE("parse_edge_list skips comments and blank lines") {
    Graph g = parse_edge_list("# header\n\n0 1\n  # indented comment\n1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_graph_json basic and declared order") {
    Graph g = parse_graph_json(R"({"nodes":[0,1],"edges":[[0,1]]})");
    CHECK(g.nodes() == std::vector<NodeId>{0, 1});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});

    Graph ordered = parse_graph_json(R"({"nodes":[2,0,1],"edges":[[0,1]]})");
    CHECK(ordered.nodes() == std::vector<NodeId>{2, 0, 1});
}

TEST_CASE("parse_graph_json accepts non-contiguous ids") {
    Graph g = parse_graph_json(R"({"nodes":[5,7],"edges":[[5,7]]})");
    CHECK(g.nodes() == std::vector<NodeId>{5, 7});
    CHECK(g.has_edge(5, 7));
}

TEST_CASE("parse_graph_json names the offending field") {
    CHECK_THROWS_WITH_AS(
        parse_graph_json(R"({"nodes":[0],"edges":[[0,1]]})"),
        doctest::Contains("endpoint 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph_json(R"({"edges":[]})"),
                         doctest::Contains("nodes"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parse_graph_json(R"({"nodes":[0,1],"edges":[[0]]})"),
        doctest::Contains("edges[0]"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"nodes":[1,1],"edges":[]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json("not json"), std::runtime_error);
}

TEST_CASE("graph invariants at construction") {
    CHECK_THROWS_AS(Graph({0, 1}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({0, 0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({0}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("bfs_subgraph hand-traced on a path") {
    // 0-1-2-3 from node 1: visit 1, then neighbors ascending (0, 2).
    Graph g = oracle::path_graph(4);
    auto sub = bfs_subgraph(g, 1, 3, 0);
    REQUIRE(sub.has_value());
    CHECK(sub->order == NodeOrder{1, 0, 2});
    CHECK(sub->graph.nodes() == std::vector<NodeId>{1, 0, 2});
    CHECK(sub->graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("bfs_subgraph single-node target") {
    Graph g = oracle::cycle_graph(5);
    auto sub = bfs_subgraph(g, 3, 1, 0);
    REQUIRE(sub.has_value());
    CHECK(sub->order == NodeOrder{3});
    CHECK(sub->graph.edge_count() == 0);
}

TEST_CASE("bfs_subgraph skips when the reachable set is too small") {
    // Components {0,1,2} and {3,4}.
    Graph g({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {3, 4}});
    CHECK_FALSE(bfs_subgraph(g, 0, 5, 0).has_value());
    CHECK(bfs_subgraph(g, 0, 3, 0).has_value());
}

TEST_CASE("bfs_subgraph argument errors") {
    Graph g = oracle::path_graph(3);
    CHECK_THROWS_AS(bfs_subgraph(g, 9, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(bfs_subgraph(g, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(oracle::complete_graph(2)));
    CHECK_FALSE(is_connected(oracle::edgeless_graph(2)));
    CHECK(is_connected(oracle::path_graph(5)));
    CHECK_THROWS_AS(is_connected(Graph({}, {})), std::invalid_argument);
}

TEST_CASE("bfs_subgraph is deterministic and yields connected subgraphs") {
    SplitMix64 rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(9));
        Graph g = oracle::random_connected_graph(n, rng);
        NodeId start = g.nodes()[rng.next_below(static_cast<std::uint64_t>(n))];
        int target = 2 + static_cast<int>(rng.next_below(
                             static_cast<std::uint64_t>(n - 1)));
        auto a = bfs_subgraph(g, start, target, 1);
        auto b = bfs_subgraph(g, start, target, 2);  // seed must not matter
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->order == b->order);
        CHECK(a->graph == b->graph);
        CHECK(is_connected(a->graph));
        CHECK(a->order.front() == start);
    }
}
