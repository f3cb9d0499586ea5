#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cusa/bracketing.hpp"
#include "cusa/core_bounds.hpp"

namespace cusa {

enum class SharpName {
    P0,    ///< largest p with U_p < sinc on (0, pi/2)
    P1,    ///< sqrt(15)/5: smallest q with sinc < U_q, largest p with V_p < sinhc
    Unit,  ///< 1: smallest q with sinhc < V_q
};

struct SharpConstant {
    SharpName name = SharpName::P0;
    double value = 0.0;
    double certified_radius = 0.0;
};

/// F_p(pi/2) = 2/pi - U_p(pi/2), the closed-form value of the one-sided limit at pi/2.
[[nodiscard]] inline double endpoint_gap(double p)
{
    return 2.0 / std::numbers::pi - u_bound(BoundParam::trig(p), std::numbers::pi / 2.0);
}

/**
 * Root p0 of F_p(pi/2) = 0 on [1/2, 1].  F_p(pi/2) decreases strictly in p,
 * so bisection to 1e-12 keeps a valid bracket; one Newton step on
 * d/dp F_p(pi/2) = -dU_p/dp(pi/2) polishes the last digits.  The returned
 * radius r satisfies F_{p0-r}(pi/2) > 0 > F_{p0+r}(pi/2) as evaluated.
 * When rounding noise in F exceeds the requested tolerance the radius is
 * widened until the certificate holds.
 */
template <class Observer>
SharpConstant solve_p0(double tolerance, Observer&& observe)
{
    if (!(tolerance >= 1e-15)) throw std::invalid_argument("solve_p0: tolerance must be >= 1e-15");
    constexpr double half_pi = std::numbers::pi / 2.0;
    const Bracket b = bisect_sign_change(endpoint_gap, Bracket{0.5, 1.0}, std::min(tolerance, 1e-12),
                                         std::forward<Observer>(observe));
    double p = b.midpoint();
    const double step = endpoint_gap(p) / (-u_bound_dp(p, half_pi));
    const double polished = p - step;
    if (polished > b.lo && polished < b.hi) p = polished;

    double r = tolerance;
    while (!(endpoint_gap(p - r) > 0.0 && endpoint_gap(p + r) < 0.0)) {
        r *= 2.0;
        if (r > 0.25) throw std::runtime_error("solve_p0: could not certify root");
    }
    return {SharpName::P0, p, r};
}

[[nodiscard]] inline SharpConstant solve_p0(double tolerance = 1e-12)
{
    return solve_p0(tolerance, [](const Bracket&) {});
}

/// Process-wide p0 at the default tolerance, computed once.
[[nodiscard]] inline const SharpConstant& sharp_p0()
{
    static const SharpConstant value = solve_p0();
    return value;
}

[[nodiscard]] inline SharpConstant p1() noexcept
{
    // sqrt(15)/5 rounded once; the radius covers that single rounding
    const double v = std::sqrt(15.0) / 5.0;
    return {SharpName::P1, v, 0.5 * (std::nextafter(v, 1.0) - v)};
}

[[nodiscard]] inline SharpConstant unit_threshold() noexcept { return {SharpName::Unit, 1.0, 0.0}; }

/// Best constants of  U_p + c_lo x^4 < sinc(x) < U_p + c_hi x^4  on (0, pi/2).
struct QuarticBound {
    BoundParam p = BoundParam::trig(0.0);
    double c_lo = 0.0;
    double c_hi = 0.0;
};

/// Valid for p^2 <= 3/5, where x^-4 F_p(x) decreases; p = 0 uses the limit family.
[[nodiscard]] inline QuarticBound quartic_constants(const BoundParam& p)
{
    detail::require_family(p, Family::Trig, "quartic_constants");
    if (p.value() * p.value() > 0.6 * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()))
        throw std::out_of_range("quartic_constants: p must satisfy p^2 <= 3/5");
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double h2 = half_pi * half_pi;
    QuarticBound q{p, 0.0, fourth_order_coeff(p)};
    q.c_lo = endpoint_gap(p.value()) / (h2 * h2);
    return q;
}

enum class Side { Lower, Upper };

[[nodiscard]] inline double quartic_bound_eval(const QuarticBound& q, double x, Side side)
{
    if (!(x > 0.0 && x <= std::numbers::pi / 2.0))
        throw std::domain_error("quartic_bound_eval: x must lie in (0, pi/2]");
    const double c = side == Side::Lower ? q.c_lo : q.c_hi;
    const double x2 = x * x;
    return u_bound(q.p, x) + c * x2 * x2;
}

}  // namespace cusa
