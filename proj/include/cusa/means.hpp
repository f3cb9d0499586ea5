#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "cusa/core_bounds.hpp"
#include "cusa/enclosure.hpp"

namespace cusa {

/// A pair of finite positive reals.
class MeanPoint {
public:
    MeanPoint(double a, double b) : a_(a), b_(b)
    {
        if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b)))
            throw std::domain_error("MeanPoint: a and b must be finite and positive");
    }
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

    /// x = ln(a/b)/2, the argument that turns L/G into sinh(x)/x and A_p^p/G^p into cosh(px).
    [[nodiscard]] double hyperbolic_argument() const noexcept
    {
        // log1p keeps full relative accuracy when a and b are close
        if (a_ <= 2.0 * b_ && b_ <= 2.0 * a_) return 0.5 * std::log1p((a_ - b_) / b_);
        const double r = a_ / b_;
        if (std::isnormal(r) && std::isfinite(r)) return 0.5 * std::log(r);
        return 0.5 * (std::log(a_) - std::log(b_));
    }

    friend bool operator==(const MeanPoint&, const MeanPoint&) = default;

private:
    double a_;
    double b_;
};

[[nodiscard]] inline double geometric_mean(const MeanPoint& m) noexcept
{
    return std::sqrt(m.a()) * std::sqrt(m.b());
}

[[nodiscard]] inline double arithmetic_mean(const MeanPoint& m) noexcept
{
    return 0.5 * m.a() + 0.5 * m.b();
}

/// A_p = ((a^p + b^p)/2)^(1/p), A_0 = G; evaluated as G cosh(px)^(1/p).
[[nodiscard]] inline double power_mean(double p, const MeanPoint& m)
{
    const double g = geometric_mean(m);
    if (p == 0.0) return g;
    const double x = m.hyperbolic_argument();
    const double s = std::sinh(0.5 * p * x);
    // log cosh(px) = log1p(2 sinh^2(px/2))
    return detail::require_finite(g * std::exp(std::log1p(2.0 * s * s) / p), "power_mean");
}

/**
 * Logarithmic mean (a-b)/(ln a - ln b).  Within |a/b - 1| < 1e-4 the
 * quotient u/ln(1+u) is replaced by 1 + u/2 - u^2/12 + u^3/24.
 */
[[nodiscard]] inline double log_mean(const MeanPoint& m)
{
    const double a = m.a();
    const double b = m.b();
    if (a == b) return a;
    const double u = (a - b) / b;
    if (std::fabs(u) < 1e-4) return b * (1.0 + u * (0.5 + u * (-1.0 / 12.0 + u / 24.0)));
    return 0.5 * (a - b) / m.hyperbolic_argument();
}

/**
 * Schwab-Borchardt mean for a >= 0, b > 0:
 *   sqrt(b^2 - a^2)/arccos(a/b)   (a < b),
 *   a                             (a = b),
 *   sqrt(a^2 - b^2)/arccosh(a/b)  (a > b).
 * Near a = b both branches share the series 1 + u/3 - u^2/45 + u^3/189 in u = a/b - 1.
 */
[[nodiscard]] inline double sb_mean(double a, double b)
{
    if (!(a >= 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b)))
        throw std::domain_error("sb_mean: need a >= 0 and b > 0");
    if (a == b) return a;
    const double u = (a - b) / b;
    if (std::fabs(u) < 1e-4) return b * (1.0 + u * (1.0 / 3.0 + u * (-1.0 / 45.0 + u / 189.0)));
    if (a < b) return std::sqrt((b - a) * (b + a)) / std::acos(a / b);
    return std::sqrt((a - b) * (a + b)) / std::acosh(a / b);
}

[[nodiscard]] inline double sb_mean(const MeanPoint& m) { return sb_mean(m.a(), m.b()); }

/**
 * Lower bound for SB(a, b) from 16/27 cos(3x/4) + 11/27 < sin(x)/x at
 * x = arccos(a/b) (and its hyperbolic twin for a > b):
 *   (8 sqrt2/27) ((2a - b) sqrt((a+b)/2) + b^(3/2))^(1/2) b^(1/4) + (11/27) b.
 * The factor (2a - b) carries the sign of cos(3x/2).
 */
[[nodiscard]] inline double sb_lower_bound(const MeanPoint& m)
{
    const double a = m.a();
    const double b = m.b();
    const double inner = (2.0 * a - b) * std::sqrt(0.5 * (a + b)) + b * std::sqrt(b);
    return 8.0 * std::numbers::sqrt2 / 27.0 * std::sqrt(inner) * std::sqrt(std::sqrt(b)) + 11.0 / 27.0 * b;
}

/// The same bound with |b - 2a| in place of (2a - b); agrees with sb_lower_bound for a >= b/2 only.
[[nodiscard]] inline double sb_lower_bound_abs_form(const MeanPoint& m)
{
    const double a = m.a();
    const double b = m.b();
    const double inner = std::fabs(b - 2.0 * a) * std::sqrt(0.5 * (a + b)) + b * std::sqrt(b);
    return 8.0 * std::numbers::sqrt2 / 27.0 * std::sqrt(inner) * std::sqrt(std::sqrt(b)) + 11.0 / 27.0 * b;
}

namespace detail {

// s * gap with its error: relative rounding on the series path, absolute (8 ulps of `magnitude`) on the direct one.
inline StableDifference scaled_gap(double s, const GapEvaluation& g, double magnitude)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double value = s * g.value;
    if (g.method == GapMethod::Series) return {value, s * g.tail_bound + 4.0 * eps * std::fabs(value)};
    return {value, 8.0 * eps * magnitude};
}

}  // namespace detail

/// SB(a,b) - sb_lower_bound(a,b) = b F_{3/4}(theta) or b G_{3/4}(theta), free of cancellation near a = b.
[[nodiscard]] inline StableDifference sb_lower_bound_gap(const MeanPoint& m)
{
    const double a = m.a();
    const double b = m.b();
    if (a == b) return {0.0, 0.0};
    if (a < b) {
        const double theta = 2.0 * std::asin(std::sqrt(0.5 * (b - a) / b));
        return detail::scaled_gap(b, gap_trig(BoundParam::trig(0.75), theta), b);
    }
    const double u = (a - b) / b;
    const double theta = std::log1p(u + std::sqrt(u * (2.0 + u)));
    return detail::scaled_gap(b, gap_hyp(BoundParam::hyperbolic(0.75), theta), sb_mean(a, b));
}

/**
 * (1/(3p^2)) A_p^p G^(1-p) + (1 - 1/(3p^2)) G  for p != 0,  G (1 + ln^2(b/a)/24)  at p = 0.
 * Equal to G V_|p|(x) with x = ln(a/b)/2, which is how it is evaluated.
 */
[[nodiscard]] inline double mean_family(double p, const MeanPoint& m)
{
    return geometric_mean(m) * v_bound(BoundParam::hyperbolic(std::fabs(p)), m.hyperbolic_argument());
}

/// mean_family(q) - mean_family(p) without cancellation near a = b.
[[nodiscard]] inline StableDifference mean_family_increment(double p, double q, const MeanPoint& m)
{
    const double g = geometric_mean(m);
    const StableDifference d = v_bound_increment(p, q, m.hyperbolic_argument());
    return {g * d.value, g * d.error};
}

/// [mean_family(sqrt15/5), mean_family(1)], which contains L(a, b).
[[nodiscard]] inline Enclosure log_mean_sandwich(const MeanPoint& m)
{
    if (m.a() == m.b()) return Enclosure::of(m.a(), m.a());
    return Enclosure::of(mean_family(std::sqrt(15.0) / 5.0, m), mean_family(1.0, m));
}

struct SandwichMargins {
    StableDifference below;  ///< L - lower end
    StableDifference above;  ///< upper end - L
};

/// Both margins of log_mean_sandwich as G G_p(x), from the stable gap functions.
[[nodiscard]] inline SandwichMargins log_mean_sandwich_margins(const MeanPoint& m)
{
    const double g = geometric_mean(m);
    const double x = m.hyperbolic_argument();
    const double scale = g * sinhc(x);
    return {detail::scaled_gap(g, gap_hyp(BoundParam::hyperbolic(std::sqrt(15.0) / 5.0), x), scale),
            detail::scaled_gap(-g, gap_hyp(BoundParam::hyperbolic(1.0), x), scale)};
}

/// Constants of the comparison D(x) between V_{p1} and (cosh q0 x)^(1/(3 q0^2)).
struct DCoefficients {
    double p1 = std::sqrt(15.0) / 5.0;
    double q0 = 1.0 / std::sqrt(5.0);
};

/// d_n = (3 p1 q0 - 1)(1 + 2q0/p1)^(2n-1) + (3 p1 q0 + 1)(2q0/p1 - 1)^(2n-1) - 2(6 q0^2 - 1).
[[nodiscard]] inline double d_coefficient(int n)
{
    if (n < 1) throw std::invalid_argument("d_coefficient: n must be >= 1");
    const DCoefficients k;
    const double r = 2.0 * k.q0 / k.p1;
    const double s = 3.0 * k.p1 * k.q0;
    return (s - 1.0) * std::pow(1.0 + r, 2 * n - 1) + (s + 1.0) * std::pow(r - 1.0, 2 * n - 1) -
           2.0 * (6.0 * k.q0 * k.q0 - 1.0);
}

/// D(x) = V_{p1}(x) - (cosh q0 x)^(1/(3 q0^2)); series difference for |x| <= 1/2.
[[nodiscard]] inline StableDifference lower_bound_comparison_stable(double x)
{
    const DCoefficients k;
    if (std::fabs(x) <= kSeriesSwitch) {
        const EvenSeries v = v_bound_series(k.p1);
        EvenSeries g = geometric_hyp_series(k.q0);
        // both x^4 coefficients equal 1/120 exactly; drop the rounding residue so D starts at x^6
        g.add(2, v[2] - g[2]);
        return series_difference(v, g, x);
    }
    const double v = v_bound(BoundParam::hyperbolic(k.p1), x);
    const double g = geometric_bound_hyp(k.q0, x);
    return {v - g, 8.0 * std::numeric_limits<double>::epsilon() * std::max(v, g)};
}

[[nodiscard]] inline double lower_bound_comparison(double x)
{
    if (!(x > 0.0)) throw std::domain_error("lower_bound_comparison: x must be positive");
    return lower_bound_comparison_stable(x).value;
}

/**
 * Seeded pairs for randomized mean checks: a log-uniform in [e^-3, e^3]
 * and |ln(b/a)| log-uniform in [1e-6, ln 1e6] with random sign, so the
 * ratios b/a span 1 + 1e-6 .. 1e6 on both sides of 1.
 */
[[nodiscard]] inline std::vector<MeanPoint> random_mean_points(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> base(-3.0, 3.0);
    std::uniform_real_distribution<double> spread(std::log(1e-6), std::log(std::log(1e6)));
    std::bernoulli_distribution flip(0.5);
    std::vector<MeanPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = std::exp(base(rng));
        const double lr = std::exp(spread(rng));
        const double b = a * std::exp(flip(rng) ? lr : -lr);
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace cusa
