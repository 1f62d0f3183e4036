#pragma once

// Quadrature weights of the fractional Adams-Bashforth-Moulton scheme.
//
// Predictor (product rectangle):
//   theta(j, n) = (n - j + 1)^a - (n - j)^a,                         0 <= j <= n
// Corrector (product trapezoid), with b = a + 1:
//   rho(0, n)   = n^b - (n - a)(n + 1)^a
//   rho(j, n)   = (n - j + 2)^b + (n - j)^b - 2 (n - j + 1)^b,       1 <= j <= n
//   rho(n+1, n) = 1
//
// The corrector weights are second differences of t^b and lose about log2(n)
// bits to cancellation when evaluated literally. They are evaluated here from
// the binomial expansion of (1 +- u)^b with u = 1 / (n - j + 1), whose terms
// are all positive, so each weight is accurate to a few ulps for every n.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fractional_order.hpp"

namespace fracdyn {
namespace detail {

/// (m + 1)^a - m^a for m >= 0, a > 0.
inline double power_step(std::int64_t m, double a)
{
    return std::pow(static_cast<double>(m + 1), a) - std::pow(static_cast<double>(m), a);
}

/// (m + 2)^b + m^b - 2 (m + 1)^b with b = a + 1, for m >= 0 and a in (0, 1].
inline double power_second_difference(std::int64_t m, double a)
{
    if (m == 0)
        return 2.0 * std::expm1(a * std::numbers::ln2); // 2^b - 2

    // (m+1)^b [(1+u)^b + (1-u)^b - 2] = 2 (m+1)^(a-1) sum_{k even >= 2} C(b,k) u^(k-2)
    const double b = a + 1.0;
    const double u = 1.0 / static_cast<double>(m + 1);
    const double u2 = u * u;
    double binom = b * (b - 1.0) / 2.0; // C(b, 2)
    double upow = 1.0;
    double sum = binom;
    for (int k = 4;; k += 2) {
        binom *= (b - k + 2) * (b - k + 1) / (static_cast<double>(k) * (k - 1));
        upow *= u2;
        const double term = binom * upow;
        sum += term;
        if (term <= sum * 0.25 * std::numeric_limits<double>::epsilon())
            break;
    }
    const double w = static_cast<double>(m + 1);
    return 2.0 * (std::pow(w, a) / w) * sum; // not pow(w, a - 1): a - 1 rounds
}

/// n^b - (n - a)(n + 1)^a with b = a + 1, for n >= 0 and a in (0, 1].
inline double corrector_start_weight(std::int64_t n, double a)
{
    if (n == 0)
        return a;

    // w^b [(1-u)^b - 1 + b u] = w^(a-1) sum_{k >= 2} |C(b,k)| u^(k-2), w = n + 1
    const double b = a + 1.0;
    const double u = 1.0 / static_cast<double>(n + 1);
    double binom = b * (b - 1.0) / 2.0;
    double upow = 1.0;
    double sum = binom;
    for (int k = 3;; ++k) {
        binom *= std::abs(b - k + 1) / k;
        upow *= u;
        const double term = binom * upow;
        sum += term;
        if (term <= sum * 0.25 * std::numeric_limits<double>::epsilon())
            break;
    }
    const double w = static_cast<double>(n + 1);
    return (std::pow(w, a) / w) * sum;
}

} // namespace detail

/// Predictor weight theta_{j,n+1}.
inline double theta_weight(std::int64_t j, std::int64_t n, FractionalOrder alpha)
{
    if (j < 0 || j > n)
        throw std::out_of_range("theta_weight: need 0 <= j <= n, got j = " + std::to_string(j) +
                                ", n = " + std::to_string(n));
    return detail::power_step(n - j, alpha.value());
}

/// Corrector weight rho_{j,n+1}.
inline double rho_weight(std::int64_t j, std::int64_t n, FractionalOrder alpha)
{
    if (n < 0 || j < 0 || j > n + 1)
        throw std::out_of_range("rho_weight: need 0 <= j <= n + 1, got j = " + std::to_string(j) +
                                ", n = " + std::to_string(n));
    if (j == n + 1)
        return 1.0;
    if (j == 0)
        return detail::corrector_start_weight(n, alpha.value());
    return detail::power_second_difference(n - j, alpha.value());
}

} // namespace fracdyn
