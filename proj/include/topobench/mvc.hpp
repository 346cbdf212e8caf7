#pragma once

#include "topobench/graph.hpp"

namespace topobench {

struct VertexCoverSolution {
    std::vector<NodeId> cover;  // ascending
    int size = 0;               // == cover.size()
};

// True iff every edge of g has at least one endpoint in s. Throws if s
// contains an id that is not a node of g.
bool is_vertex_cover(const Graph& g, const std::vector<NodeId>& s);

// Exact minimum vertex cover by exhaustive search: subset sizes k = 0..n
// ascending, and within a size, subsets in lexicographic order of the
// sorted node list; the first valid cover wins, so ties break
// deterministically. Guarded at n <= 26.
VertexCoverSolution solve_classical_mvc(const Graph& g);

}  // namespace topobench
