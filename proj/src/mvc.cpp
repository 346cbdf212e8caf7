#include "topobench/mvc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace topobench {

bool is_vertex_cover(const Graph& g, const std::vector<NodeId>& s) {
    std::unordered_set<NodeId> selected;
    selected.reserve(s.size());
    for (NodeId id : s) {
        if (!g.has_node(id))
            throw std::invalid_argument("is_vertex_cover: " +
                                        std::to_string(id) +
                                        " is not a node of the graph");
        selected.insert(id);
    }
    for (const auto& [u, v] : g.edges())
        if (selected.count(u) == 0 && selected.count(v) == 0) return false;
    return true;
}

namespace {

// Advances `c` (ascending index combination out of n) to its lexicographic
// successor; returns false after the last combination.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

VertexCoverSolution solve_classical_mvc(const Graph& g) {
    int n = g.node_count();
    if (n > 26)
        throw std::runtime_error(
            "solve_classical_mvc: graph has " + std::to_string(n) +
            " nodes, exhaustive search is limited to 26");

    std::vector<NodeId> sorted_ids = g.nodes();
    std::sort(sorted_ids.begin(), sorted_ids.end());

    // Edge endpoints as positions in the sorted id list.
    std::vector<std::pair<int, int>> edge_positions;
    edge_positions.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        auto pos = [&](NodeId id) {
            return static_cast<int>(
                std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id) -
                sorted_ids.begin());
        };
        edge_positions.emplace_back(pos(u), pos(v));
    }

    std::vector<char> in_subset(static_cast<std::size_t>(n), 0);
    auto covers = [&]() {
        for (const auto& [a, b] : edge_positions)
            if (!in_subset[static_cast<std::size_t>(a)] &&
                !in_subset[static_cast<std::size_t>(b)])
                return false;
        return true;
    };

    for (int k = 0; k <= n; ++k) {
        std::vector<int> combo(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
        do {
            std::fill(in_subset.begin(), in_subset.end(), 0);
            for (int idx : combo) in_subset[static_cast<std::size_t>(idx)] = 1;
            if (covers()) {
                VertexCoverSolution sol;
                sol.cover.reserve(combo.size());
                for (int idx : combo)
                    sol.cover.push_back(
                        sorted_ids[static_cast<std::size_t>(idx)]);
                sol.size = k;
                return sol;
            }
        } while (k > 0 && next_combination(combo, n));
    }
    // Unreachable: the full node set always covers.
    throw std::logic_error("solve_classical_mvc: no cover found");
}

}  // namespace topobench
