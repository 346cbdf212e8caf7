#include "topobench/qaoa.hpp"

#include <stdexcept>

#include "topobench/bits.hpp"

namespace topobench {

namespace {

void validate_params(const QaoaParams& params) {
    if (params.p < 1)
        throw std::invalid_argument("qaoa depth p must be >= 1");
    if (params.gamma.size() != static_cast<std::size_t>(params.p) ||
        params.beta.size() != static_cast<std::size_t>(params.p))
        throw std::invalid_argument(
            "gamma and beta must each hold exactly p angles");
}

}  // namespace

Statevector qaoa_state(const DiagonalCost& d, const QaoaParams& params) {
    validate_params(params);
    Statevector sv = uniform_state(d.n);
    for (int layer = 0; layer < params.p; ++layer) {
        apply_phase(sv, d, params.gamma[static_cast<std::size_t>(layer)]);
        apply_mixer(sv, params.beta[static_cast<std::size_t>(layer)]);
    }
    return sv;
}

Statevector qaoa_state(const IsingHamiltonian& h, const QaoaParams& params) {
    return qaoa_state(build_diagonal(h), params);
}

double expectation(const Statevector& sv, const DiagonalCost& d,
                   double offset) {
    if (sv.n != d.n)
        throw std::invalid_argument("expectation: dimension mismatch");
    double total = 0.0;
    for (std::size_t b = 0; b < sv.dimension(); ++b)
        total += std::norm(sv.amplitudes[b]) * d.energies[b];
    return total + offset;
}

double ProbabilityTable::at(const std::string& bitstring) const {
    if (bitstring.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("probability lookup: length mismatch");
    return values[index_from_bitstring(bitstring)];
}

ProbabilityTable probabilities(const Statevector& sv) {
    ProbabilityTable table;
    table.n = sv.n;
    table.values.resize(sv.dimension());
    for (std::size_t b = 0; b < sv.dimension(); ++b)
        table.values[b] = std::norm(sv.amplitudes[b]);
    return table;
}

std::string most_probable_bitstring(const ProbabilityTable& probs) {
    if (probs.values.empty())
        throw std::invalid_argument("most_probable_bitstring: empty table");
    std::size_t best = 0;
    for (std::size_t b = 1; b < probs.values.size(); ++b) {
        if (probs.values[b] > probs.values[best] ||
            (probs.values[b] == probs.values[best] &&
             bitstring_index_less(b, best, probs.n)))
            best = b;
    }
    return bitstring_from_index(best, probs.n);
}

MinEnergyBitstring min_energy_bitstring(const ProbabilityTable& probs,
                                        const QuboProblem& q,
                                        double support_epsilon) {
    if (support_epsilon < 0.0)
        throw std::invalid_argument("support_epsilon must be >= 0");
    if (probs.n != q.n)
        throw std::invalid_argument("min_energy_bitstring: size mismatch");

    bool found = false;
    std::size_t best = 0;
    double best_energy = 0.0;
    for (std::size_t b = 0; b < probs.values.size(); ++b) {
        if (!(probs.values[b] > support_epsilon)) continue;
        double energy = qubo_cost(q, bits_from_index(b, q.n));
        if (!found || energy < best_energy ||
            (energy == best_energy && bitstring_index_less(b, best, q.n))) {
            found = true;
            best = b;
            best_energy = energy;
        }
    }
    if (!found)
        throw std::runtime_error(
            "min_energy_bitstring: no bitstring above support threshold");
    return {bitstring_from_index(best, q.n), best_energy};
}

}  // namespace topobench
