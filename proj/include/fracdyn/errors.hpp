#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracdyn {

/// A named parameter failed validation. `field()` is the offending key as it
/// appears in configuration documents.
class ParameterError : public std::invalid_argument
{
  public:
    ParameterError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// The solver produced an overflowed or NaN state.
class NonFiniteError : public std::runtime_error
{
  public:
    NonFiniteError(std::size_t step, double time, std::size_t grid_steps)
        : std::runtime_error("non-finite state at step " + std::to_string(step) + " (t = " +
                             std::to_string(time) + ", N = " + std::to_string(grid_steps) + ")"),
          step_(step), time_(time), grid_steps_(grid_steps)
    {
    }

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }
    std::size_t grid_steps() const noexcept { return grid_steps_; }

  private:
    std::size_t step_;
    double time_;
    std::size_t grid_steps_;
};

} // namespace fracdyn
