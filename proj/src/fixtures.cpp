#include "topobench/fixtures.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "topobench/rng.hpp"

namespace topobench {

Graph make_grid_graph(int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            NodeId id = static_cast<NodeId>(r) * width + c;
            nodes.push_back(id);
            if (c + 1 < width) edges.emplace_back(id, id + 1);
            if (r + 1 < height) edges.emplace_back(id, id + width);
        }
    return Graph(std::move(nodes), edges);
}

Graph make_organic_graph(int n, std::uint64_t seed, double shortcut_prob,
                         double radius) {
    if (n < 2) throw std::invalid_argument("organic graph needs n >= 2");

    SplitMix64 rng(seed);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = rng.next_unit();
        y[static_cast<std::size_t>(i)] = rng.next_unit();
    }

    auto dist2 = [&](int a, int b) {
        double dx = x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)];
        double dy = y[static_cast<std::size_t>(a)] - y[static_cast<std::size_t>(b)];
        return dx * dx + dy * dy;
    };

    std::set<std::pair<int, int>> edge_set;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    auto add_edge = [&](int a, int b) {
        if (a == b) return;
        auto e = std::minmax(a, b);
        if (edge_set.emplace(e.first, e.second).second) {
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
    };

    // Growth: attach each arrival to its nearest predecessor (keeps the
    // graph connected), plus an occasional degree-weighted shortcut.
    add_edge(0, 1);
    for (int v = 2; v < n; ++v) {
        int nearest = 0;
        for (int u = 1; u < v; ++u)
            if (dist2(v, u) < dist2(v, nearest)) nearest = u;
        add_edge(v, nearest);

        if (rng.next_unit() < shortcut_prob) {
            int total = std::accumulate(degree.begin(),
                                        degree.begin() + v, 0);
            std::uint64_t pick =
                rng.next_below(static_cast<std::uint64_t>(total));
            int target = 0;
            for (int u = 0; u < v; ++u) {
                std::uint64_t d =
                    static_cast<std::uint64_t>(degree[static_cast<std::size_t>(u)]);
                if (pick < d) {
                    target = u;
                    break;
                }
                pick -= d;
            }
            add_edge(v, target);
        }
    }

    // Short-range infill, as in a random geometric graph.
    double r2 = radius * radius;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (dist2(a, b) < r2) add_edge(a, b);

    std::vector<NodeId> nodes(static_cast<std::size_t>(n));
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    std::vector<Edge> edges;
    edges.reserve(edge_set.size());
    for (const auto& [a, b] : edge_set) edges.emplace_back(a, b);
    return Graph(std::move(nodes), edges);
}

}  // namespace topobench
