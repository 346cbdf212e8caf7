#pragma once

#include <string>

#include "topobench/statevector.hpp"

namespace topobench {

// Angle schedule of a depth-p circuit; gamma and beta each hold exactly p
// entries (radians).
struct QaoaParams {
    int p = 1;
    std::vector<double> gamma;
    std::vector<double> beta;
};

// Uniform superposition, then for each layer k: phase with gamma_k followed
// by the transverse-field mixer with beta_k. The diagonal is offset-free;
// the offset would only contribute a global phase.
Statevector qaoa_state(const DiagonalCost& d, const QaoaParams& params);
Statevector qaoa_state(const IsingHamiltonian& h, const QaoaParams& params);

// sum_b |amplitude_b|^2 E(b) + offset.
double expectation(const Statevector& sv, const DiagonalCost& d,
                   double offset);

// All 2^n basis probabilities, indexed by basis state.
struct ProbabilityTable {
    int n = 0;
    std::vector<double> values;

    double at_index(std::size_t b) const { return values[b]; }
    double at(const std::string& bitstring) const;
};

ProbabilityTable probabilities(const Statevector& sv);

// Bitstring of maximal probability; exact ties break to the
// lexicographically smallest bitstring.
std::string most_probable_bitstring(const ProbabilityTable& probs);

struct MinEnergyBitstring {
    std::string bitstring;
    double energy = 0.0;
};

// Among bitstrings with probability > support_epsilon, the one minimizing
// qubo_cost; ties break lexicographically. Throws when the support is empty.
MinEnergyBitstring min_energy_bitstring(const ProbabilityTable& probs,
                                        const QuboProblem& q,
                                        double support_epsilon = 0.0);

}  // namespace topobench
