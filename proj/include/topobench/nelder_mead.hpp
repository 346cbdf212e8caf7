#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "topobench/rng.hpp"

namespace topobench {

struct OptimizerConfig {
    int max_iterations = 200;            // objective evaluations after setup
    double initial_simplex_scale = 0.5;  // radians
    double convergence_tolerance = 1e-6; // on simplex objective spread
    std::uint64_t seed = 0;
};

struct OptimizationResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    int evaluations = 0;  // total objective calls, setup included
    bool converged = false;
};

// Thrown when the objective returns NaN or infinity; carries the parameter
// vector that produced it.
class NonFiniteObjectiveError : public std::runtime_error {
  public:
    explicit NonFiniteObjectiveError(std::vector<double> params)
        : std::runtime_error("objective returned a non-finite value"),
          params_(std::move(params)) {}

    const std::vector<double>& params() const { return params_; }

  private:
    std::vector<double> params_;
};

using Objective = std::function<double(const std::vector<double>&)>;

// `dim` independent draws from uniform(-pi, pi); the generator is the
// documented SplitMix64 stream, so results reproduce bit-for-bit.
std::vector<double> random_init(int dim, SplitMix64& rng);

// Derivative-free simplex minimization with the standard coefficients
// (reflection 1, expansion 2, contraction 0.5, shrink 0.5). The initial
// simplex is `init` plus an initial_simplex_scale step along each axis.
// Runs at most max_iterations objective evaluations after the initial
// simplex, returns the best point seen anywhere, and reports converged
// when the simplex objective spread fell below convergence_tolerance.
OptimizationResult nelder_mead_minimize(const Objective& objective,
                                        const std::vector<double>& init,
                                        const OptimizerConfig& config);

}  // namespace topobench
