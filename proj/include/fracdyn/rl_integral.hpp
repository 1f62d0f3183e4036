#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"
#include "weights.hpp"

namespace fracdyn {

/// Riemann-Liouville integral I^alpha of grid samples, product-rectangle rule:
///
///   out[k] = tau^a / Gamma(a + 1) * sum_{j<k} samples[j] ((k-j)^a - (k-j-1)^a)
///
/// with out[0] = 0. Any alpha > 0 is accepted.
inline std::vector<double> rl_integral(std::span<const double> samples, double alpha,
                                       const UniformGrid& grid)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("rl_integral: order must be positive, got " +
                                    std::to_string(alpha));
    if (samples.size() != grid.nodes())
        throw std::invalid_argument("rl_integral: " + std::to_string(samples.size()) +
                                    " samples for a grid of " + std::to_string(grid.nodes()) +
                                    " nodes");

    const std::size_t nodes = grid.nodes();
    std::vector<double> kernel(nodes);
    for (std::size_t m = 0; m < nodes; ++m)
        kernel[m] = detail::power_step(static_cast<std::int64_t>(m), alpha);

    const double scale = std::pow(grid.step_size(), alpha) / std::tgamma(alpha + 1.0);
    std::vector<double> out(nodes, 0.0);
    for (std::size_t k = 1; k < nodes; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            sum += samples[j] * kernel[k - 1 - j];
        out[k] = scale * sum;
    }
    return out;
}

} // namespace fracdyn
