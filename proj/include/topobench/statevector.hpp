#pragma once

#include <complex>
#include <vector>

#include "topobench/qubo.hpp"

namespace topobench {

// Dense n-qubit state. Basis index b encodes bit x_i = (b >> i) & 1 for
// qubit i (see bits.hpp for the textual convention). Guarded at n <= 20
// (2^20 amplitudes).
struct Statevector {
    int n = 0;
    std::vector<std::complex<double>> amplitudes;

    std::size_t dimension() const { return amplitudes.size(); }
};

inline constexpr int kMaxQubits = 20;

// Every amplitude 2^{-n/2}, zero imaginary part.
Statevector uniform_state(int n);

// Per-basis-state Ising energies E(b), offset excluded. Precomputed once per
// Hamiltonian and reused across parameter evaluations.
struct DiagonalCost {
    int n = 0;
    std::vector<double> energies;
};

DiagonalCost build_diagonal(const IsingHamiltonian& h);

// amplitude_b *= exp(-i * gamma * E(b)). Norm preserving.
void apply_phase(Statevector& sv, const DiagonalCost& d, double gamma);

// exp(-i * beta * X) on every qubit: for each pair of basis states differing
// only in bit i, (a, b) -> (cos(beta) a - i sin(beta) b,
//                          -i sin(beta) a + cos(beta) b).
void apply_mixer(Statevector& sv, double beta);

double norm_squared(const Statevector& sv);

}  // namespace topobench
