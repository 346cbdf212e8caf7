#pragma once

#include "topobench/graph.hpp"

namespace topobench {

// Structural summary of one (sub)graph.
struct GraphMetrics {
    int n = 0;
    int m = 0;
    double degree_variance = 0.0;
    double fiedler = 0.0;

    bool operator==(const GraphMetrics&) const = default;
};

// Population variance (divide by n) of the degree sequence. Throws on an
// empty graph.
double degree_variance(const Graph& g);

// Second-smallest eigenvalue of the combinatorial Laplacian L = D - A.
// Returns 0.0 and logs a warning on any internal failure (including n < 2),
// so callers never have to handle eigensolver errors; zero also encodes
// "disconnected".
double algebraic_connectivity(const Graph& g);

GraphMetrics compute_metrics(const Graph& g);

// Dense Laplacian, row-major over node indices (exposed for tests).
std::vector<double> laplacian_matrix(const Graph& g);

}  // namespace topobench
