#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cusa/acceleration.hpp"
#include "cusa/constants.hpp"
#include "cusa/core_bounds.hpp"
#include "cusa/enclosure.hpp"
#include "cusa/quadrature.hpp"

namespace cusa {

namespace detail {

// (sin y - y) / y^3, series for |y| <= 1
inline double sin_defect_cubed(double y)
{
    if (std::fabs(y) <= 1.0) {
        const double y2 = y * y;
        double term = -1.0 / 6.0;
        double sum = 0.0;
        for (int k = 1; k < 14; ++k) {
            sum += term;
            term *= -y2 / (double(2 * k + 2) * double(2 * k + 3));
        }
        return sum;
    }
    return (std::sin(y) - y) / (y * y * y);
}

}  // namespace detail

/// Integral of U_p over [0, t]:  t + (sin(pt) - pt)/(3p^3), continuous at p = 0 (t - t^3/18).
[[nodiscard]] inline double u_bound_integral(const BoundParam& p, double t)
{
    detail::require_family(p, Family::Trig, "u_bound_integral");
    return t + t * t * t * detail::sin_defect_cubed(p.value() * t) / 3.0;
}

/**
 * Two-sided bound for Si(t) on 0 < t <= pi/2, obtained by integrating
 * U_p + c x^4 with the best quartic constants of p (p^2 <= 3/5).
 */
[[nodiscard]] inline Enclosure si_enclosure(double t, const BoundParam& p)
{
    if (!(t > 0.0 && t <= std::numbers::pi / 2.0)) throw std::domain_error("si_enclosure: t must lie in (0, pi/2]");
    const QuarticBound q = quartic_constants(p);
    const double base = u_bound_integral(p, t);
    const double t5 = t * t * t * t * t;
    return Enclosure::of(base + q.c_lo * t5 / 5.0, base + q.c_hi * t5 / 5.0);
}

/// Si(t) by adaptive quadrature of sinc, 0 <= t <= 10.
[[nodiscard]] inline QuadratureResult si_reference(double t)
{
    if (!(t >= 0.0 && t <= 10.0)) throw std::domain_error("si_reference: t must lie in [0, 10]");
    return integrate([](double x) { return sinc(x); }, 0.0, t, 1e-12);
}

/**
 * Bounds for Sh(t) = int_0^t x/sinh(x) dx from integrating
 * 3/(cosh x + 2) < x/sinh x < 9/(5 cosh(sqrt(15) x/5) + 4).
 * t = +inf gives the exact limits of both closed forms.
 */
[[nodiscard]] inline Enclosure sh_enclosure(double t)
{
    if (!(t >= 0.0)) throw std::domain_error("sh_enclosure: t must be >= 0");
    const double r3 = std::sqrt(3.0);
    const double r15 = std::sqrt(15.0);

    // sqrt3 ln((e^t - r3 + 2)/(e^t + r3 + 2)) - sqrt3 ln(2 - r3), rewritten in w = e^-t
    const double w = std::exp(-t);
    const double lo = r3 * (std::log1p((2.0 - r3) * w) - std::log1p((2.0 + r3) * w) + std::log(2.0 + r3));

    // 2 sqrt15 (atan u - atan 3), u = (5/3)e^s + 4/3;  atan u - atan 3 = atan(m / (3(2+m))), m = e^s - 1
    const double m = std::expm1(r15 * t / 5.0);
    const double ratio = m == 0.0 ? 0.0 : 1.0 / (3.0 * (1.0 + 2.0 / m));
    const double hi = 2.0 * r15 * std::atan(ratio);
    return Enclosure::of(lo, hi);
}

/// Sh(t) by adaptive quadrature.
[[nodiscard]] inline QuadratureResult sh_reference(double t)
{
    if (!(t >= 0.0 && t <= 700.0)) throw std::domain_error("sh_reference: t must lie in [0, 700]");
    return integrate([](double x) { return 1.0 / sinhc(x); }, 0.0, t, 1e-12);
}

/// psi'(1/2) = 2 Sh(inf) enclosed in [2 sqrt3 ln(2+sqrt3), 2 sqrt15 pi - 4 sqrt15 atan 3].
[[nodiscard]] inline Enclosure trigamma_half_enclosure()
{
    const Enclosure tail = sh_enclosure(std::numeric_limits<double>::infinity());
    return Enclosure::of(2.0 * tail.lo, 2.0 * tail.hi);
}

/// Lower integrand of the Catalan estimate, 1/U_{sqrt15/5}(x) = 1/((5/9)cos(sqrt15 x/5) + 4/9).
[[nodiscard]] inline double catalan_lower_integrand(double x)
{
    return 1.0 / (5.0 / 9.0 * std::cos(std::sqrt(15.0) * x / 5.0) + 4.0 / 9.0);
}

/// Upper integrand, 1/U_{3/4}(x) = 1/((16/27)cos(3x/4) + 11/27).
[[nodiscard]] inline double catalan_upper_integrand(double x)
{
    return 1.0 / (16.0 / 27.0 * std::cos(0.75 * x) + 11.0 / 27.0);
}

/// Closed forms of the two integrands integrated over [0, pi/2].
[[nodiscard]] inline Enclosure catalan_integrand_integrals()
{
    const double r15 = std::sqrt(15.0);
    const double angle = r15 * std::numbers::pi / 10.0;
    const double c = 4.0 * std::cos(angle);
    const double s = 3.0 * std::sin(angle);
    const double lower = r15 / 2.0 * std::log((c + s + 5.0) / (c - s + 5.0));

    const double r2 = std::sqrt(2.0);
    const double a = 11.0 * std::sqrt(2.0 - r2);
    const double b = 3.0 * r15 * std::sqrt(r2 + 2.0);
    const double upper = 2.0 * r15 / 5.0 * std::log((a + b + 32.0) / (a - b + 32.0));
    return Enclosure::of(lower, upper);
}

/// Catalan's constant G = (1/2) int_0^{pi/2} x/sin(x) dx, enclosed by halving the integrand integrals.
[[nodiscard]] inline Enclosure catalan_enclosure()
{
    const Enclosure i = catalan_integrand_integrals();
    return Enclosure::of(0.5 * i.lo, 0.5 * i.hi);
}

inline constexpr std::size_t kCatalanAveragingDepth = 40;

/**
 * G = sum (-1)^n/(2n+1)^2 from `terms` terms.  depth = 0 gives the raw
 * partial sum (error below 1/(2 terms)^2); the default depth averages the
 * tail of the partial sums.
 */
[[nodiscard]] inline double catalan_reference(std::size_t terms, std::size_t depth = kCatalanAveragingDepth)
{
    if (terms < 1) throw std::invalid_argument("catalan_reference: terms must be >= 1");
    return iterated_average_sum(
        [](std::size_t n) {
            const double d = double(2 * n + 1);
            return (n % 2 == 0 ? 1.0 : -1.0) / (d * d);
        },
        terms, depth);
}

/// (1/2) int_0^{pi/2} x/sin(x) dx by quadrature.
[[nodiscard]] inline QuadratureResult catalan_integral_reference()
{
    QuadratureResult r = integrate([](double x) { return 1.0 / sinc(x); }, 0.0, std::numbers::pi / 2.0, 1e-13);
    r.value *= 0.5;
    r.error_estimate *= 0.5;
    return r;
}

}  // namespace cusa
