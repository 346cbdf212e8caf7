#include "topobench/qubo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "topobench/bits.hpp"

namespace topobench {

namespace {

void validate_order(const Graph& g, const NodeOrder& order) {
    if (order.size() != g.nodes().size())
        throw std::invalid_argument("node order size does not match graph");
    std::vector<NodeId> a = order;
    std::vector<NodeId> b = g.nodes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw std::invalid_argument(
            "node order is not a permutation of the graph's nodes");
}

}  // namespace

QuboProblem build_mvc_qubo(const Graph& g, const NodeOrder& order,
                           const QuboParams& params) {
    if (!(params.penalty_a > 0.0) || !(params.cost_b > 0.0) ||
        !(params.penalty_a > params.cost_b))
        throw std::invalid_argument(
            "qubo params must satisfy penalty_a > cost_b > 0");
    validate_order(g, order);

    const double a = params.penalty_a;
    const double b = params.cost_b;
    const int n = g.node_count();

    std::unordered_map<NodeId, int> var;
    var.reserve(order.size());
    for (int i = 0; i < n; ++i) var[order[static_cast<std::size_t>(i)]] = i;

    QuboProblem q;
    q.n = n;
    q.node_order = order;
    q.constant = a * g.edge_count();
    q.linear.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        q.linear[static_cast<std::size_t>(i)] =
            b - a * g.degree(order[static_cast<std::size_t>(i)]);

    for (const auto& [u, v] : g.edges()) {
        int i = var.at(u);
        int j = var.at(v);
        if (i > j) std::swap(i, j);
        q.quadratic.emplace_back(i, j, a);
    }
    std::sort(q.quadratic.begin(), q.quadratic.end());
    return q;
}

double qubo_cost(const QuboProblem& q, const std::vector<int>& bits) {
    if (bits.size() != static_cast<std::size_t>(q.n))
        throw std::invalid_argument("qubo_cost: bitstring length mismatch");
    double cost = q.constant;
    for (int i = 0; i < q.n; ++i)
        cost += q.linear[static_cast<std::size_t>(i)] *
                bits[static_cast<std::size_t>(i)];
    for (const auto& [i, j, c] : q.quadratic)
        cost += c * bits[static_cast<std::size_t>(i)] *
                bits[static_cast<std::size_t>(j)];
    return cost;
}

double qubo_cost(const QuboProblem& q, const std::string& bitstring) {
    return qubo_cost(q, bits_from_string(bitstring));
}

IsingHamiltonian qubo_to_ising(const QuboProblem& q) {
    IsingHamiltonian ham;
    ham.n = q.n;
    ham.h.assign(static_cast<std::size_t>(q.n), 0.0);
    ham.offset = q.constant;

    for (int i = 0; i < q.n; ++i) {
        double c = q.linear[static_cast<std::size_t>(i)];
        ham.h[static_cast<std::size_t>(i)] -= c / 2.0;
        ham.offset += c / 2.0;
    }

    std::map<std::pair<int, int>, double> couplings;
    for (const auto& [i, j, c] : q.quadratic) {
        couplings[{i, j}] += c / 4.0;
        ham.h[static_cast<std::size_t>(i)] -= c / 4.0;
        ham.h[static_cast<std::size_t>(j)] -= c / 4.0;
        ham.offset += c / 4.0;
    }
    for (const auto& [key, c] : couplings)
        ham.j.emplace_back(key.first, key.second, c);
    return ham;
}

double ising_energy(const IsingHamiltonian& h, const std::vector<int>& spins) {
    if (spins.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("ising_energy: spin vector length mismatch");
    double energy = 0.0;
    for (int i = 0; i < h.n; ++i)
        energy += h.h[static_cast<std::size_t>(i)] *
                  spins[static_cast<std::size_t>(i)];
    for (const auto& [i, j, c] : h.j)
        energy += c * spins[static_cast<std::size_t>(i)] *
                  spins[static_cast<std::size_t>(j)];
    return energy;
}

std::vector<int> spins_from_bits(const std::vector<int>& bits) {
    std::vector<int> spins(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        spins[i] = 1 - 2 * bits[i];
    return spins;
}

std::string qubo_to_json(const QuboProblem& q) {
    nlohmann::ordered_json doc;
    doc["n"] = q.n;
    doc["constant"] = q.constant;
    doc["linear"] = q.linear;
    auto& quad = doc["quadratic"] = nlohmann::ordered_json::array();
    for (const auto& [i, j, c] : q.quadratic) quad.push_back({i, j, c});
    doc["node_order"] = q.node_order;
    return doc.dump(2) + "\n";
}

std::string ising_to_json(const IsingHamiltonian& h) {
    nlohmann::ordered_json doc;
    doc["n"] = h.n;
    doc["offset"] = h.offset;
    doc["h"] = h.h;
    auto& j = doc["j"] = nlohmann::ordered_json::array();
    for (const auto& [a, b, c] : h.j) j.push_back({a, b, c});
    return doc.dump(2) + "\n";
}

}  // namespace topobench
