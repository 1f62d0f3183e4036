#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fractional_order.hpp"

namespace fracdyn {

/// Right-hand side f(t, state) of D^alpha x = f(t, x). Writes the derivative
/// into `out`, which has the system dimension. Must be pure.
using RhsFunction =
    std::function<void(double t, std::span<const double> state, std::span<double> out)>;

/// Cauchy problem for a system of Gerasimov-Caputo equations with
/// per-component orders.
class SystemSpec
{
  public:
    SystemSpec(std::vector<FractionalOrder> orders, std::vector<double> initial_state,
               RhsFunction rhs)
        : orders_(std::move(orders)), initial_state_(std::move(initial_state)), rhs_(std::move(rhs))
    {
        if (orders_.empty())
            throw std::invalid_argument("system dimension must be at least 1");
        if (orders_.size() != initial_state_.size())
            throw std::invalid_argument("orders and initial state differ in length");
        if (!rhs_)
            throw std::invalid_argument("system has no right-hand side");
    }

    std::size_t dimension() const noexcept { return orders_.size(); }
    const std::vector<FractionalOrder>& orders() const noexcept { return orders_; }
    const std::vector<double>& initial_state() const noexcept { return initial_state_; }

    void evaluate(double t, std::span<const double> state, std::span<double> out) const
    {
        rhs_(t, state, out);
    }

    double min_order() const
    {
        return std::ranges::min(orders_, {}, &FractionalOrder::value).value();
    }

  private:
    std::vector<FractionalOrder> orders_;
    std::vector<double> initial_state_;
    RhsFunction rhs_;
};

} // namespace fracdyn
