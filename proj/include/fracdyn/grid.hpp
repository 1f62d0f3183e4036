#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracdyn {

/// Uniform partition of [0, T] into N steps of size T / N.
class UniformGrid
{
  public:
    UniformGrid(double horizon, std::size_t steps)
        : horizon_(horizon), steps_(steps), step_size_(horizon / static_cast<double>(steps))
    {
        if (!(horizon > 0.0) || !std::isfinite(horizon))
            throw std::invalid_argument("grid horizon must be positive and finite, got " +
                                        std::to_string(horizon));
        if (steps == 0)
            throw std::invalid_argument("grid needs at least one step");
    }

    double horizon() const noexcept { return horizon_; }
    std::size_t steps() const noexcept { return steps_; }
    double step_size() const noexcept { return step_size_; }
    std::size_t nodes() const noexcept { return steps_ + 1; }

    double node(std::size_t k) const noexcept { return static_cast<double>(k) * step_size_; }

    /// The grid with every step halved.
    UniformGrid refined() const { return UniformGrid(horizon_, 2 * steps_); }

  private:
    double horizon_;
    std::size_t steps_;
    double step_size_;
};

/// Grid solution: states[k] approximates the solution at times[k].
struct Trajectory
{
    std::vector<double> times;
    std::vector<std::vector<double>> states;

    std::size_t steps() const noexcept { return times.empty() ? 0 : times.size() - 1; }
    std::size_t dimension() const noexcept { return states.empty() ? 0 : states.front().size(); }
    double horizon() const noexcept { return times.empty() ? 0.0 : times.back(); }

    bool operator==(const Trajectory&) const = default;
};

} // namespace fracdyn
