#include <doctest.h>

#include <bit>

#include "oracle_helpers.hpp"
#include "topobench/mvc.hpp"
#include "topobench/rng.hpp"

using namespace topobench;

TEST_CASE("is_vertex_cover on the triangle") {
    Graph g = oracle::complete_graph(3);
    CHECK(is_vertex_cover(g, {0, 1}));
    CHECK_FALSE(is_vertex_cover(g, {0}));
    CHECK(is_vertex_cover(g, g.nodes()));
    CHECK_THROWS_AS(is_vertex_cover(g, {0, 9}), std::invalid_argument);
}

TEST_CASE("solve_classical_mvc on small named graphs") {
    VertexCoverSolution star = solve_classical_mvc(oracle::star_graph(4));
    CHECK(star.size == 1);
    CHECK(star.cover == std::vector<NodeId>{0});

    // C_5: verify by direct enumeration that no 2-subset covers and that
    // some 3-subset does, then check the solver agrees.
    Graph c5 = oracle::cycle_graph(5);
    bool any_pair_covers = false;
    for (std::uint64_t mask = 0; mask < 32; ++mask)
        if (std::popcount(mask) == 2 && oracle::mask_is_cover(c5, mask))
            any_pair_covers = true;
    bool any_triple_covers = false;
    for (std::uint64_t mask = 0; mask < 32; ++mask)
        if (std::popcount(mask) == 3 && oracle::mask_is_cover(c5, mask))
            any_triple_covers = true;
    CHECK_FALSE(any_pair_covers);
    CHECK(any_triple_covers);
    CHECK(solve_classical_mvc(c5).size == 3);

    VertexCoverSolution empty = solve_classical_mvc(oracle::edgeless_graph(4));
    CHECK(empty.size == 0);
    CHECK(empty.cover.empty());
}

TEST_CASE("solve_classical_mvc deterministic tie-break") {
    // C_4 has two minimum covers {0,2} and {1,3}; lexicographic-first wins.
    VertexCoverSolution sol = solve_classical_mvc(oracle::cycle_graph(4));
    CHECK(sol.cover == std::vector<NodeId>{0, 2});
}

TEST_CASE("solve_classical_mvc size guard") {
    CHECK_THROWS_AS(solve_classical_mvc(oracle::edgeless_graph(27)),
                    std::runtime_error);
}

TEST_CASE("closed-form cover sizes for graph families") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(solve_classical_mvc(oracle::complete_graph(n)).size == n - 1);
        CHECK(solve_classical_mvc(oracle::star_graph(n)).size == 1);
        CHECK(solve_classical_mvc(oracle::path_graph(n)).size == n / 2);
        CHECK(solve_classical_mvc(oracle::cycle_graph(n)).size == (n + 1) / 2);
    }
}

TEST_CASE("solver matches an independent full-2^n enumeration") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        Graph g = oracle::random_graph(n, 0.15 + 0.6 * rng.next_unit(), rng);
        oracle::CoverScan scan = oracle::scan_all_covers(g);
        VertexCoverSolution sol = solve_classical_mvc(g);
        CHECK(sol.size == scan.min_size);
        CHECK(sol.size == static_cast<int>(sol.cover.size()));
        CHECK(is_vertex_cover(g, sol.cover));
    }
}

TEST_CASE("minimality: no cover of size one less exists") {
    SplitMix64 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        Graph g = oracle::random_connected_graph(n, rng, 0.3);
        VertexCoverSolution sol = solve_classical_mvc(g);
        REQUIRE(sol.size >= 1);
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            if (std::popcount(mask) != sol.size - 1) continue;
            CHECK_FALSE(oracle::mask_is_cover(g, mask));
        }
    }
}
