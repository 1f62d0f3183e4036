#pragma once

// Runge double-recalculation error estimates and empirical orders.
//
// For a solution on N steps and its recomputation on 2N steps,
//   xi = max_i |x_i - x_{2i}| / (2^mu - 1),   mu = 1 + min_i alpha_i,
// and the computational order between consecutive rows is log2(xi_N / xi_2N).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abm.hpp"
#include "grid.hpp"
#include "system.hpp"

namespace fracdyn::analysis {

inline double runge_error(const Trajectory& coarse, const Trajectory& fine, double mu,
                          std::size_t component)
{
    const std::size_t n = coarse.steps();
    if (n == 0 || fine.steps() != 2 * n)
        throw std::invalid_argument("runge_error: step counts " + std::to_string(n) + " and " +
                                    std::to_string(fine.steps()) + " are not in 1:2 ratio");
    const double tolerance = 4.0 * std::numeric_limits<double>::epsilon() *
                             std::max(std::abs(coarse.horizon()), std::abs(fine.horizon()));
    if (std::abs(coarse.horizon() - fine.horizon()) > tolerance)
        throw std::invalid_argument("runge_error: horizons differ");
    if (component >= coarse.dimension() || component >= fine.dimension())
        throw std::out_of_range("runge_error: component out of range");

    double worst = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
        worst = std::max(worst,
                         std::abs(coarse.states[i][component] - fine.states[2 * i][component]));
    return worst / (std::exp2(mu) - 1.0);
}

inline double computational_order(double xi_coarse, double xi_fine)
{
    if (!(xi_coarse > 0.0) || !(xi_fine > 0.0))
        throw std::domain_error("computational_order: error estimates must be positive");
    return std::log2(xi_coarse / xi_fine);
}

struct ConvergenceRow
{
    std::size_t steps = 0;
    double step_size = 0.0;
    std::vector<double> xi;                  // per component
    std::vector<std::optional<double>> order; // empty on the first row and when xi degenerates

    double xi_x() const { return xi.at(0); }
    double xi_y() const { return xi.at(1); }
    std::optional<double> p_x() const { return order.at(0); }
    std::optional<double> p_y() const { return order.at(1); }
};

struct ConvergenceReport
{
    std::vector<ConvergenceRow> rows;
    double mu = 0.0;
};

/// 1 + min_i alpha_i.
inline double theoretical_order(const SystemSpec& system) { return 1.0 + system.min_order(); }

/// Solves at every N in `step_counts` and at 2N, one independent solve per
/// distinct grid, run concurrently. Assembly order is fixed, so the report does
/// not depend on scheduling.
inline ConvergenceReport convergence_study(const SystemSpec& system, double horizon,
                                           std::span<const std::size_t> step_counts)
{
    if (step_counts.size() < 2)
        throw std::invalid_argument("convergence_study: need at least two step counts");
    if (step_counts[0] == 0)
        throw std::invalid_argument("convergence_study: step counts must be positive");
    for (std::size_t k = 1; k < step_counts.size(); ++k)
        if (step_counts[k] != 2 * step_counts[k - 1])
            throw std::invalid_argument("convergence_study: step counts must double row to row");

    std::map<std::size_t, std::future<Trajectory>> pending;
    for (std::size_t n : step_counts)
        for (std::size_t m : {n, 2 * n})
            if (!pending.contains(m))
                pending.emplace(m, std::async(std::launch::async, [&system, horizon, m] {
                                    return abm_solve(system, UniformGrid(horizon, m));
                                }));

    // get() in ascending N: the coarsest failing grid is reported first.
    std::map<std::size_t, Trajectory> solved;
    for (auto& [m, future] : pending)
        solved.emplace(m, future.get());

    ConvergenceReport report;
    report.mu = theoretical_order(system);
    const std::size_t dim = system.dimension();
    for (std::size_t k = 0; k < step_counts.size(); ++k) {
        const std::size_t n = step_counts[k];
        ConvergenceRow row;
        row.steps = n;
        row.step_size = horizon / static_cast<double>(n);
        row.xi.resize(dim);
        row.order.resize(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            row.xi[c] = runge_error(solved.at(n), solved.at(2 * n), report.mu, c);
            if (k > 0) {
                const double previous = report.rows[k - 1].xi[c];
                if (previous > 0.0 && row.xi[c] > 0.0)
                    row.order[c] = computational_order(previous, row.xi[c]);
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace fracdyn::analysis
