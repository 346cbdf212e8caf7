#include "topobench/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace topobench {

namespace {

constexpr double kOffDiagonalThreshold = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double v = a[static_cast<std::size_t>(p * n + q)];
            sum += 2.0 * v * v;
        }
    return std::sqrt(sum);
}

}  // namespace

SymmetricEigenResult jacobi_eigensystem(std::vector<double> a, int n) {
    if (n < 1) throw std::invalid_argument("jacobi_eigensystem: n must be >= 1");
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("jacobi_eigensystem: matrix size mismatch");

    auto at = [&](std::vector<double>& m, int r, int c) -> double& {
        return m[static_cast<std::size_t>(r * n + c)];
    };

    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) at(v, i, i) = 1.0;

    bool converged = off_diagonal_frobenius(a, n) < kOffDiagonalThreshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                if (apq == 0.0) continue;

                // Stable rotation computation (Golub & Van Loan 8.4).
                double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) +
                            std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = at(a, k, p);
                    double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(a, p, k);
                    double aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = at(v, k, p);
                    double vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal_frobenius(a, n) < kOffDiagonalThreshold;
    }

    SymmetricEigenResult result;
    result.n = n;
    result.converged = converged;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x * n + x)] <
               a[static_cast<std::size_t>(y * n + y)];
    });

    result.values.resize(static_cast<std::size_t>(n));
    result.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        int src = perm[static_cast<std::size_t>(k)];
        result.values[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(src * n + src)];
        for (int r = 0; r < n; ++r)
            result.vectors[static_cast<std::size_t>(r * n + k)] =
                at(v, r, src);
    }
    return result;
}

}  // namespace topobench
