#pragma once

// Generalized Dubovsky model of long economic waves with heredity:
//
//   D^a1 x = -lambda n x (x - 1)(y - y*) + delta1 cos(omega1 t),   x(0) = a
//   D^a2 y =  n (1 - n) y^2 (x - x*)     + delta2 cos(omega2 t),   y(0) = b
//
// x is innovation efficiency, y is efficiency of fixed assets and n is the
// accumulation rate. a1 = a2 = 1 with delta1 = delta2 = 0 is the classical model.

#include <array>
#include <cmath>
#include <span>
#include <string>

#include "errors.hpp"
#include "fractional_order.hpp"
#include "system.hpp"

namespace fracdyn::gdm {

struct GdmParams
{
    double lambda = 1.5;
    double accumulation_rate = 0.2;
    double delta1 = 1.0;
    double delta2 = 1.0;
    double omega1 = 0.5;
    double omega2 = 0.5;
    double x_star = 1.35;
    double y_star = 0.5;
    double a = 5.0;
    double b = 4.0;
    FractionalOrder alpha1{1.0};
    FractionalOrder alpha2{1.0};

    /// Throws ParameterError naming the first invalid field (by its config key).
    void validate() const
    {
        auto finite = [](const char* key, double v) {
            if (!std::isfinite(v))
                throw ParameterError(key, "must be finite");
        };
        finite("lambda", lambda);
        finite("n", accumulation_rate);
        finite("delta1", delta1);
        finite("delta2", delta2);
        finite("omega1", omega1);
        finite("omega2", omega2);
        finite("x_star", x_star);
        finite("y_star", y_star);
        finite("a", a);
        finite("b", b);

        if (!(lambda > 0.0))
            throw ParameterError("lambda", "must be > 0, got " + std::to_string(lambda));
        if (!(accumulation_rate > 0.0 && accumulation_rate < 1.0))
            throw ParameterError("n", "must lie in the open interval (0, 1), got " +
                                          std::to_string(accumulation_rate));
        if (delta1 < 0.0)
            throw ParameterError("delta1", "must be >= 0");
        if (delta2 < 0.0)
            throw ParameterError("delta2", "must be >= 0");
        if (omega1 < 0.0)
            throw ParameterError("omega1", "must be >= 0");
        if (omega2 < 0.0)
            throw ParameterError("omega2", "must be >= 0");
        if (!(a > 0.0))
            throw ParameterError("a", "initial x must be > 0");
        if (!(b > 0.0))
            throw ParameterError("b", "initial y must be > 0");
    }

    bool operator==(const GdmParams&) const = default;
};

/// Right-hand side of the model. The x-equation uses (delta1, omega1) and the
/// y-equation (delta2, omega2) in both predictor and corrector stages.
class GdmRhs
{
  public:
    explicit GdmRhs(const GdmParams& params) : p_(params) {}

    std::array<double, 2> operator()(double t, double x, double y) const
    {
        const double n = p_.accumulation_rate;
        return {-p_.lambda * n * x * (x - 1.0) * (y - p_.y_star) + p_.delta1 * std::cos(p_.omega1 * t),
                n * (1.0 - n) * y * y * (x - p_.x_star) + p_.delta2 * std::cos(p_.omega2 * t)};
    }

    void operator()(double t, std::span<const double> state, std::span<double> out) const
    {
        const auto [dx, dy] = (*this)(t, state[0], state[1]);
        out[0] = dx;
        out[1] = dy;
    }

  private:
    GdmParams p_;
};

/// Two-dimensional system with orders (alpha1, alpha2) and initial state (a, b).
inline SystemSpec gdm_system(const GdmParams& params)
{
    params.validate();
    return SystemSpec({params.alpha1, params.alpha2}, {params.a, params.b}, GdmRhs(params));
}

} // namespace fracdyn::gdm
