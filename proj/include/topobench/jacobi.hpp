#pragma once

#include <vector>

namespace topobench {

// Eigendecomposition of a dense symmetric matrix.
struct SymmetricEigenResult {
    int n = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major; column k pairs with values[k]
    bool converged = false;

    double vector_entry(int row, int k) const {
        return vectors[static_cast<std::size_t>(row * n + k)];
    }
};

// Cyclic Jacobi rotations on a dense symmetric matrix (row-major `a`,
// n x n). Sweeps until the off-diagonal Frobenius norm drops below 1e-12
// or 100 sweeps have run; `converged` reports which. Adequate for the
// Laplacians this project sees (n <= ~64).
SymmetricEigenResult jacobi_eigensystem(std::vector<double> a, int n);

}  // namespace topobench
