#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "topobench/graph.hpp"

namespace topobench {

// Weights of the vertex-cover QUBO. penalty_a scales the edge-coverage
// penalty, cost_b the per-vertex cost; penalty_a > cost_b > 0 guarantees
// that every QUBO minimizer is a valid cover.
struct QuboParams {
    double penalty_a = 2.0;
    double cost_b = 1.0;
};

// Quadratic pseudo-Boolean cost
//   cost(x) = constant + sum_i linear[i] x_i + sum_{i<j} q_ij x_i x_j
// with variable i bound to graph node node_order[i].
struct QuboProblem {
    int n = 0;
    std::vector<double> linear;
    std::vector<std::tuple<int, int, double>> quadratic;  // i < j, sorted
    double constant = 0.0;
    NodeOrder node_order;
};

// Spin-variable form: energy(z) = sum_i h[i] z_i + sum_{i<j} J_ij z_i z_j,
// plus a scalar offset that is excluded from circuit phases and added back
// to reported expectations.
struct IsingHamiltonian {
    int n = 0;
    std::vector<double> h;
    std::vector<std::tuple<int, int, double>> j;  // i < j, sorted
    double offset = 0.0;
};

// Vertex-cover cost A * sum_{(u,v) in E} (1-x_u)(1-x_v) + B * sum_i x_i,
// expanded to standard quadratic form: constant = A*m,
// linear_i = B - A*deg(i), quadratic_ij = A per edge. Minimizers over
// {0,1}^n are exactly the minimum vertex covers when A > B.
QuboProblem build_mvc_qubo(const Graph& g, const NodeOrder& order,
                           const QuboParams& params);

double qubo_cost(const QuboProblem& q, const std::vector<int>& bits);
double qubo_cost(const QuboProblem& q, const std::string& bitstring);

// Change of variables x_i = (1 - z_i) / 2: each linear c_i contributes
// -c_i/2 to h_i and +c_i/2 to the offset; each quadratic c_ij contributes
// +c_ij/4 to J_ij, -c_ij/4 to h_i and h_j, and +c_ij/4 to the offset.
IsingHamiltonian qubo_to_ising(const QuboProblem& q);

// Offset NOT included; callers add it when comparing against QUBO costs.
double ising_energy(const IsingHamiltonian& h, const std::vector<int>& spins);

// Bit 0 -> spin +1, bit 1 -> spin -1.
std::vector<int> spins_from_bits(const std::vector<int>& bits);

// Debug dumps for golden-file tests; field names are fixed in
// docs/FORMATS.md.
std::string qubo_to_json(const QuboProblem& q);
std::string ising_to_json(const IsingHamiltonian& h);

}  // namespace topobench
