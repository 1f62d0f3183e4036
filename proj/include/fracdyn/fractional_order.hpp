#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdyn {

/// Order of a Gerasimov-Caputo derivative, restricted to (0, 1].
/// The value 1 selects the classical first derivative.
class FractionalOrder
{
  public:
    explicit FractionalOrder(double value) : value_(value)
    {
        if (!(value > 0.0 && value <= 1.0))
            throw std::invalid_argument("fractional order must lie in (0, 1], got " +
                                        std::to_string(value));
    }

    double value() const noexcept { return value_; }

    bool operator==(const FractionalOrder&) const = default;

  private:
    double value_;
};

} // namespace fracdyn
