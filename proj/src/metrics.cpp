#include "topobench/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "topobench/jacobi.hpp"
#include "topobench/log.hpp"

namespace topobench {

double degree_variance(const Graph& g) {
    int n = g.node_count();
    if (n == 0) throw std::invalid_argument("degree_variance: empty graph");
    double mean = 0.0;
    for (NodeId id : g.nodes()) mean += g.degree(id);
    mean /= n;
    double var = 0.0;
    for (NodeId id : g.nodes()) {
        double d = g.degree(id) - mean;
        var += d * d;
    }
    return var / n;
}

std::vector<double> laplacian_matrix(const Graph& g) {
    int n = g.node_count();
    std::vector<double> lap(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        lap[static_cast<std::size_t>(i * n + i)] = g.degree(g.nodes()[i]);
    for (const auto& [u, v] : g.edges()) {
        int i = g.index_of(u);
        int j = g.index_of(v);
        lap[static_cast<std::size_t>(i * n + j)] = -1.0;
        lap[static_cast<std::size_t>(j * n + i)] = -1.0;
    }
    return lap;
}

double algebraic_connectivity(const Graph& g) {
    int n = g.node_count();
    if (n < 2) {
        log_warn("algebraic_connectivity: undefined for n < 2, returning 0.0");
        return 0.0;
    }
    try {
        SymmetricEigenResult eig = jacobi_eigensystem(laplacian_matrix(g), n);
        if (!eig.converged) {
            log_warn("algebraic_connectivity: eigensolver did not converge, "
                     "returning 0.0");
            return 0.0;
        }
        return std::max(0.0, eig.values[1]);
    } catch (const std::exception& e) {
        log_warn(std::string("algebraic_connectivity: ") + e.what() +
                 ", returning 0.0");
        return 0.0;
    }
}

GraphMetrics compute_metrics(const Graph& g) {
    GraphMetrics m;
    m.n = g.node_count();
    m.m = g.edge_count();
    m.degree_variance = degree_variance(g);
    m.fiedler = algebraic_connectivity(g);
    return m;
}

}  // namespace topobench
