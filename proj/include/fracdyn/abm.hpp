#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "system.hpp"
#include "weights.hpp"

namespace fracdyn {
namespace detail {

// Weights of one component, indexed by distance from the newest node. Each
// entry comes straight from the closed-form weight functions.
struct ComponentWeights
{
    double predictor_scale; // tau^a / Gamma(a + 1)
    double corrector_scale; // tau^a / Gamma(a + 2)
    std::vector<double> predictor; // [m] = theta(n - m, n)
    std::vector<double> interior;  // [m] = rho(n - m, n), 1 <= n - m
    std::vector<double> start;     // [n] = rho(0, n)

    ComponentWeights(FractionalOrder order, const UniformGrid& grid)
    {
        const double a = order.value();
        const auto steps = static_cast<std::int64_t>(grid.steps());
        const double tau_a = std::pow(grid.step_size(), a);
        predictor_scale = tau_a / std::tgamma(a + 1.0);
        corrector_scale = tau_a / std::tgamma(a + 2.0);

        predictor.resize(grid.steps());
        start.resize(grid.steps());
        interior.resize(grid.steps());
        for (std::int64_t m = 0; m < steps; ++m) {
            predictor[m] = theta_weight(0, m, order);
            start[m] = rho_weight(0, m, order);
            interior[m] = rho_weight(1, m + 1, order);
        }
    }
};

} // namespace detail

/// Fractional Adams-Bashforth-Moulton PECE integration on a uniform grid.
///
/// Each step predicts every component with the product-rectangle rule over the
/// full history, evaluates the right-hand side at the prediction, and corrects
/// with the product-trapezoid rule. Right-hand-side values of accepted nodes are
/// cached, so f is evaluated exactly twice per step plus once at t = 0. The
/// memory is never truncated; cost is O(N^2 d).
///
/// Throws NonFiniteError carrying the step index when a corrected state
/// overflows or becomes NaN.
inline Trajectory abm_solve(const SystemSpec& system, const UniformGrid& grid)
{
    const std::size_t dim = system.dimension();
    const std::size_t steps = grid.steps();
    const std::vector<double>& initial = system.initial_state();

    std::vector<detail::ComponentWeights> weights;
    weights.reserve(dim);
    for (const FractionalOrder& order : system.orders())
        weights.emplace_back(order, grid);

    Trajectory out;
    out.times.resize(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        out.times[k] = grid.node(k);
    out.states.reserve(steps + 1);
    out.states.push_back(initial);

    // history[i][j] = f_i(t_j, x_j)
    std::vector<std::vector<double>> history(dim, std::vector<double>(steps + 1));
    std::vector<double> buffer(dim);
    system.evaluate(0.0, initial, buffer);
    for (std::size_t i = 0; i < dim; ++i)
        history[i][0] = buffer[i];

    std::vector<double> predicted(dim);
    std::vector<double> predicted_rhs(dim);
    std::vector<double> corrected(dim);

    for (std::size_t n = 0; n < steps; ++n) {
        const double t_next = out.times[n + 1];

        for (std::size_t i = 0; i < dim; ++i) {
            const auto& w = weights[i].predictor;
            const double* f = history[i].data();
            double sum = 0.0;
            for (std::size_t j = 0; j <= n; ++j)
                sum += w[n - j] * f[j];
            predicted[i] = initial[i] + weights[i].predictor_scale * sum;
        }

        system.evaluate(t_next, predicted, predicted_rhs);

        for (std::size_t i = 0; i < dim; ++i) {
            const auto& w = weights[i].interior;
            const double* f = history[i].data();
            double sum = predicted_rhs[i] + weights[i].start[n] * f[0];
            for (std::size_t j = 1; j <= n; ++j)
                sum += w[n - j] * f[j];
            corrected[i] = initial[i] + weights[i].corrector_scale * sum;
            if (!std::isfinite(corrected[i]))
                throw NonFiniteError(n + 1, t_next, steps);
        }

        out.states.push_back(corrected);
        system.evaluate(t_next, corrected, buffer);
        for (std::size_t i = 0; i < dim; ++i)
            history[i][n + 1] = buffer[i];
    }
    return out;
}

} // namespace fracdyn
