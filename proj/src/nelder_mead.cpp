#include "topobench/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace topobench {

std::vector<double> random_init(int dim, SplitMix64& rng) {
    if (dim < 1) throw std::invalid_argument("random_init: dim must be >= 1");
    std::vector<double> angles(static_cast<std::size_t>(dim));
    for (auto& a : angles)
        a = rng.next_uniform(-std::numbers::pi, std::numbers::pi);
    return angles;
}

namespace {

constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

OptimizationResult nelder_mead_minimize(const Objective& objective,
                                        const std::vector<double>& init,
                                        const OptimizerConfig& config) {
    if (init.empty())
        throw std::invalid_argument("nelder_mead_minimize: empty init");
    if (config.max_iterations < 1 || !(config.convergence_tolerance > 0.0))
        throw std::invalid_argument(
            "nelder_mead_minimize: invalid optimizer config");

    const std::size_t dim = init.size();

    int evaluations = 0;
    std::vector<double> best_params = init;
    double best_value = 0.0;
    bool have_best = false;

    auto evaluate = [&](const std::vector<double>& x) {
        double value = objective(x);
        ++evaluations;
        if (!std::isfinite(value)) throw NonFiniteObjectiveError(x);
        if (!have_best || value < best_value) {
            have_best = true;
            best_value = value;
            best_params = x;
        }
        return value;
    };

    // Initial simplex: init plus one scaled step per axis.
    std::vector<std::vector<double>> vertices(dim + 1, init);
    for (std::size_t k = 0; k < dim; ++k)
        vertices[k + 1][k] += config.initial_simplex_scale;

    std::vector<double> values(dim + 1);
    for (std::size_t v = 0; v <= dim; ++v) values[v] = evaluate(vertices[v]);

    const int budget = config.max_iterations;  // post-setup evaluations
    auto spent = [&]() { return evaluations - static_cast<int>(dim) - 1; };

    std::vector<std::size_t> rank(dim + 1);
    bool converged = false;

    while (true) {
        std::iota(rank.begin(), rank.end(), std::size_t{0});
        std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
            return values[a] < values[b];
        });
        const std::size_t lo = rank.front();
        const std::size_t hi = rank.back();
        const std::size_t second_hi = rank[dim - 1];

        if (values[hi] - values[lo] < config.convergence_tolerance) {
            converged = true;
            break;
        }
        if (spent() >= budget) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v <= dim; ++v) {
            if (v == hi) continue;
            for (std::size_t k = 0; k < dim; ++k)
                centroid[k] += vertices[v][k];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](const std::vector<double>& towards, double coeff) {
            std::vector<double> point(dim);
            for (std::size_t k = 0; k < dim; ++k)
                point[k] = centroid[k] + coeff * (towards[k] - centroid[k]);
            return point;
        };

        std::vector<double> reflected = blend(vertices[hi], -kReflection);
        double f_reflected = evaluate(reflected);

        if (f_reflected < values[lo]) {
            if (spent() < budget) {
                std::vector<double> expanded = blend(reflected, kExpansion);
                double f_expanded = evaluate(expanded);
                if (f_expanded < f_reflected) {
                    vertices[hi] = std::move(expanded);
                    values[hi] = f_expanded;
                    continue;
                }
            }
            vertices[hi] = std::move(reflected);
            values[hi] = f_reflected;
        } else if (f_reflected < values[second_hi]) {
            vertices[hi] = std::move(reflected);
            values[hi] = f_reflected;
        } else {
            if (spent() >= budget) break;
            bool outside = f_reflected < values[hi];
            std::vector<double> contracted =
                outside ? blend(reflected, kContraction)
                        : blend(vertices[hi], kContraction);
            double f_contracted = evaluate(contracted);
            if (f_contracted < (outside ? f_reflected : values[hi])) {
                vertices[hi] = std::move(contracted);
                values[hi] = f_contracted;
            } else {
                // Shrink every vertex toward the best one.
                bool out_of_budget = false;
                for (std::size_t v = 0; v <= dim; ++v) {
                    if (v == lo) continue;
                    for (std::size_t k = 0; k < dim; ++k)
                        vertices[v][k] = vertices[lo][k] +
                                         kShrink * (vertices[v][k] -
                                                    vertices[lo][k]);
                    if (spent() >= budget) {
                        out_of_budget = true;
                        break;
                    }
                    values[v] = evaluate(vertices[v]);
                }
                if (out_of_budget) break;
            }
        }
    }

    OptimizationResult result;
    result.best_params = std::move(best_params);
    result.best_value = best_value;
    result.evaluations = evaluations;
    result.converged = converged;
    return result;
}

}  // namespace topobench
