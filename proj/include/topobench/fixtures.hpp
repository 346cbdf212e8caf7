#pragma once

#include <cstdint>

#include "topobench/graph.hpp"

namespace topobench {

// Bundled synthetic stand-ins for street networks. The "planned" family is
// a rectangular grid (near-uniform degrees, low degree variance); the
// "organic" family grows a connected geometric network with
// degree-proportional shortcut attachment, producing hubs and high degree
// variance. Both are fully determined by their arguments.

// width x height rectangular grid; node id = row * width + column.
Graph make_grid_graph(int width, int height);

// n-node connected hybrid: nodes arrive one at a time at seeded random
// planar positions and link to their geometrically nearest predecessor;
// with probability shortcut_prob each arrival also links to a
// degree-weighted (preferential) predecessor; finally every pair closer
// than radius is linked.
Graph make_organic_graph(int n, std::uint64_t seed,
                         double shortcut_prob = 0.45, double radius = 0.17);

}  // namespace topobench
