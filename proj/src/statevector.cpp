#include "topobench/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace topobench {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
}

}  // namespace

Statevector uniform_state(int n) {
    check_qubit_count(n);
    Statevector sv;
    sv.n = n;
    std::size_t dim = std::size_t{1} << n;
    sv.amplitudes.assign(dim, std::complex<double>(
                                  1.0 / std::sqrt(static_cast<double>(dim)),
                                  0.0));
    return sv;
}

DiagonalCost build_diagonal(const IsingHamiltonian& h) {
    check_qubit_count(h.n);
    DiagonalCost d;
    d.n = h.n;
    std::size_t dim = std::size_t{1} << h.n;
    d.energies.assign(dim, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
        double e = 0.0;
        for (int i = 0; i < h.n; ++i) {
            double z = ((b >> i) & 1U) ? -1.0 : 1.0;
            e += h.h[static_cast<std::size_t>(i)] * z;
        }
        for (const auto& [i, j, c] : h.j) {
            double zi = ((b >> i) & 1U) ? -1.0 : 1.0;
            double zj = ((b >> j) & 1U) ? -1.0 : 1.0;
            e += c * zi * zj;
        }
        d.energies[b] = e;
    }
    return d;
}

void apply_phase(Statevector& sv, const DiagonalCost& d, double gamma) {
    if (sv.n != d.n)
        throw std::invalid_argument("apply_phase: dimension mismatch");
    for (std::size_t b = 0; b < sv.dimension(); ++b)
        sv.amplitudes[b] *= std::polar(1.0, -gamma * d.energies[b]);
}

void apply_mixer(Statevector& sv, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms(0.0, -std::sin(beta));  // -i sin(beta)
    for (int qubit = 0; qubit < sv.n; ++qubit) {
        const std::size_t stride = std::size_t{1} << qubit;
        for (std::size_t base = 0; base < sv.dimension();
             base += stride << 1) {
            for (std::size_t low = base; low < base + stride; ++low) {
                std::complex<double> a0 = sv.amplitudes[low];
                std::complex<double> a1 = sv.amplitudes[low + stride];
                sv.amplitudes[low] = c * a0 + ms * a1;
                sv.amplitudes[low + stride] = ms * a0 + c * a1;
            }
        }
    }
}

double norm_squared(const Statevector& sv) {
    double total = 0.0;
    for (const auto& amp : sv.amplitudes) total += std::norm(amp);
    return total;
}

}  // namespace topobench
