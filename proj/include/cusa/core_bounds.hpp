#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cusa/series.hpp"

namespace cusa {

enum class Family { Trig, Hyperbolic };

/**
 * Parameter of the bound families
 *   U_p(x) = cos(p x)/(3p^2) + 1 - 1/(3p^2)     (Trig, 0 <= p <= 1)
 *   V_p(x) = cosh(p x)/(3p^2) + 1 - 1/(3p^2)    (Hyperbolic, p >= 0)
 * p = 0 selects the quadratic limit family 1 -/+ x^2/6.
 */
class BoundParam {
public:
    [[nodiscard]] static BoundParam trig(double p)
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("trig bound parameter must lie in [0, 1]");
        return BoundParam(p, Family::Trig);
    }

    [[nodiscard]] static BoundParam hyperbolic(double p)
    {
        if (!(p >= 0.0 && std::isfinite(p)))
            throw std::domain_error("hyperbolic bound parameter must be finite and >= 0");
        return BoundParam(p, Family::Hyperbolic);
    }

    [[nodiscard]] double value() const noexcept { return value_; }
    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] bool is_limit() const noexcept { return value_ == 0.0; }

    friend bool operator==(const BoundParam&, const BoundParam&) = default;

private:
    BoundParam(double v, Family f) : value_(v), family_(f) {}
    double value_;
    Family family_;
};

namespace detail {

inline void require_family(const BoundParam& p, Family f, const char* what)
{
    if (p.family() != f) throw std::invalid_argument(std::string(what) + ": wrong parameter family");
}

inline double require_finite(double v, const char* what)
{
    if (!std::isfinite(v)) throw std::overflow_error(std::string(what) + ": result not representable");
    return v;
}

}  // namespace detail

/// Number of x^2 coefficients kept by the series builders; enough for |x| <= 1/2.
inline constexpr std::size_t kSeriesTerms = 24;

/// |x| at or below which gap functions are summed from their power series.
inline constexpr double kSeriesSwitch = 0.5;

[[nodiscard]] inline double sinc(double x) noexcept
{
    if (x == 0.0) return 1.0;
    if (std::fabs(x) < 1e-5) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

/// sinh(x)/x; throws std::overflow_error once the value leaves double range.
[[nodiscard]] inline double sinhc(double x)
{
    const double ax = std::fabs(x);
    if (ax == 0.0) return 1.0;
    if (ax < 1e-5) return 1.0 + ax * ax / 6.0;
    if (ax < 700.0) return std::sinh(ax) / ax;
    // sinh(ax) = e^ax / 2 to double precision here; split the exponential to delay overflow
    const double h = std::exp(0.5 * ax);
    return detail::require_finite(h * (h / (2.0 * ax)), "sinhc");
}

/// U_p(x), evaluated as 1 - (2/3) (sin(px/2)/p)^2 which is exact algebra and stable as p -> 0.
[[nodiscard]] inline double u_bound(const BoundParam& p, double x)
{
    detail::require_family(p, Family::Trig, "u_bound");
    if (!(std::fabs(x) < std::numbers::pi))
        throw std::domain_error("u_bound: |x| must be below pi");
    const double pv = p.value();
    if (pv == 0.0) return 1.0 - x * x / 6.0;
    const double s = std::sin(0.5 * pv * x) / pv;
    return 1.0 - 2.0 * s * s / 3.0;
}

/// V_p(x) = 1 + (2/3) (sinh(px/2)/p)^2.
[[nodiscard]] inline double v_bound(const BoundParam& p, double x)
{
    detail::require_family(p, Family::Hyperbolic, "v_bound");
    const double pv = p.value();
    if (pv == 0.0) return 1.0 + x * x / 6.0;
    const double s = std::sinh(0.5 * pv * x) / pv;
    return detail::require_finite(1.0 + 2.0 * s * s / 3.0, "v_bound");
}

/// a_n(c) = 3 - (2n+1) c^(n-1).
[[nodiscard]] inline double coeff_a(int n, double c)
{
    if (n < 1) throw std::invalid_argument("coeff_a: n must be >= 1");
    if (!(c >= 0.0)) throw std::domain_error("coeff_a: c must be >= 0");
    return 3.0 - double(2 * n + 1) * std::pow(c, n - 1);
}

/// a_{n+1}(c)/a_n(c).
[[nodiscard]] inline double coeff_ratio(int n, double c)
{
    return coeff_a(n + 1, c) / coeff_a(n, c);
}

/// a_{n+1}(c)/a_n(c) - 1 = c^(n-1) ((2n+1) - (2n+3) c) / a_n(c), without the cancellation.
[[nodiscard]] inline double coeff_ratio_excess(int n, double c)
{
    return std::pow(c, n - 1) * (double(2 * n + 1) - double(2 * n + 3) * c) / coeff_a(n, c);
}

enum class GapMethod { Series, Direct };

struct GapEvaluation {
    double x = 0.0;
    double value = 0.0;
    GapMethod method = GapMethod::Direct;
    double tail_bound = 0.0;  ///< bound on |true - value| for Series, 0 for Direct
};

namespace detail {

/**
 * sum_{n>=2} sign^n a_n(p^2) x^(2n) / (3 (2n+1)!).
 * Stops once a term is below 1e-20 of the running sum; the first omitted
 * term (times tail_factor) plus summation rounding is returned as the bound.
 */
inline GapEvaluation gap_series(double p, double x, bool alternating, double tail_factor)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double c = p * p;
    const double t = x * x;
    // t^n / (2n+1)! at n = 2
    double pf = t * t / 120.0;
    double cpow = c;  // c^(n-1)
    double sum = 0.0;
    double abs_sum = 0.0;
    double omitted = 0.0;
    for (int n = 2; n < 64; ++n) {
        const double a = 3.0 - double(2 * n + 1) * cpow;
        double term = a * pf / 3.0;
        if (alternating && (n % 2 == 1)) term = -term;
        if (n > 3 && std::fabs(term) <= 1e-20 * std::fabs(sum)) {
            omitted = std::fabs(term);
            break;
        }
        sum += term;
        abs_sum += std::fabs(term);
        pf *= t / (double(2 * n + 2) * double(2 * n + 3));
        cpow *= c;
    }
    return {x, sum, GapMethod::Series, tail_factor * omitted + 2.0 * eps * abs_sum};
}

}  // namespace detail

/// F_p(x) = sinc(x) - U_p(x); alternating power series for |x| <= 1/2.
[[nodiscard]] inline GapEvaluation gap_trig(const BoundParam& p, double x)
{
    detail::require_family(p, Family::Trig, "gap_trig");
    if (!(std::fabs(x) < std::numbers::pi)) throw std::domain_error("gap_trig: |x| must be below pi");
    if (std::fabs(x) <= kSeriesSwitch) {
        // Leibniz bound holds while a_n(p^2) >= 0, i.e. p^2 <= 3/5
        const double factor = p.value() * p.value() <= 0.6 ? 1.0 : 2.0;
        return detail::gap_series(p.value(), x, true, factor);
    }
    return {x, sinc(x) - u_bound(p, x), GapMethod::Direct, 0.0};
}

/// G_p(x) = sinhc(x) - V_p(x); one-signed power series for |x| <= 1/2.
[[nodiscard]] inline GapEvaluation gap_hyp(const BoundParam& p, double x)
{
    detail::require_family(p, Family::Hyperbolic, "gap_hyp");
    if (!std::isfinite(x)) throw std::domain_error("gap_hyp: x must be finite");
    if (std::fabs(x) <= kSeriesSwitch) return detail::gap_series(p.value(), x, false, 2.0);
    return {x, sinhc(x) - v_bound(p, x), GapMethod::Direct, 0.0};
}

/// lim_{x->0} gap(x)/x^4 = (3 - 5p^2)/360 for both families.
[[nodiscard]] inline double fourth_order_coeff(const BoundParam& p) noexcept
{
    const double c = p.value() * p.value();
    return (3.0 - 5.0 * c) / 360.0;
}

/// lim_{x->inf} G_p(x) e^(-px): -1/(6p^2) for p > 1, -1/6 at p = 1, +inf for 0 <= p < 1.
[[nodiscard]] inline double hyp_gap_exponential_limit(const BoundParam& p)
{
    detail::require_family(p, Family::Hyperbolic, "hyp_gap_exponential_limit");
    const double pv = p.value();
    if (pv < 1.0) return std::numeric_limits<double>::infinity();
    return -1.0 / (6.0 * pv * pv);
}

/// e^(-s x) sinh(x)/x without overflow (x > 0).
[[nodiscard]] inline double scaled_sinhc(double x, double s)
{
    if (!(x > 0.0)) throw std::domain_error("scaled_sinhc: x must be positive");
    return (std::exp((1.0 - s) * x) - std::exp(-(1.0 + s) * x)) / (2.0 * x);
}

/// e^(-s x) V_p(x) without overflow (x > 0).
[[nodiscard]] inline double scaled_v_bound(const BoundParam& p, double x, double s)
{
    detail::require_family(p, Family::Hyperbolic, "scaled_v_bound");
    const double pv = p.value();
    if (pv == 0.0) return std::exp(-s * x) * (1.0 + x * x / 6.0);
    const double k = 1.0 / (3.0 * pv * pv);
    return 0.5 * k * (std::exp((pv - s) * x) + std::exp(-(pv + s) * x)) + (1.0 - k) * std::exp(-s * x);
}

/// dU_p/dp = (2 - 2cos(px) - px sin(px)) / (3p^3); short series when px is tiny.
[[nodiscard]] inline double u_bound_dp(double p, double x)
{
    const double y = p * x;
    if (p == 0.0) return 0.0;
    if (std::fabs(y) < 1e-2) {
        const double y2 = y * y;
        return y2 * y2 * (1.0 / 12.0 - y2 / 180.0) / (3.0 * p * p * p);
    }
    return (2.0 - 2.0 * std::cos(y) - y * std::sin(y)) / (3.0 * p * p * p);
}

/// dV_p/dp = (px sinh(px) - 2cosh(px) + 2) / (3p^3).
[[nodiscard]] inline double v_bound_dp(double p, double x)
{
    const double y = p * x;
    if (p == 0.0) return 0.0;
    if (std::fabs(y) < 1e-2) {
        const double y2 = y * y;
        return y2 * y2 * (1.0 / 12.0 + y2 / 180.0) / (3.0 * p * p * p);
    }
    return (y * std::sinh(y) - 2.0 * std::cosh(y) + 2.0) / (3.0 * p * p * p);
}

/// (cos px)^(1/(3p^2)); domain error once cos(px) <= 0.
[[nodiscard]] inline double geometric_bound_trig(double p, double x)
{
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("geometric_bound_trig: p must lie in (0, 1]");
    const double c = std::cos(p * x);
    if (!(c > 0.0)) throw std::domain_error("geometric_bound_trig: cos(px) must be positive");
    return std::pow(c, 1.0 / (3.0 * p * p));
}

/// (cosh px)^(1/(3p^2)), evaluated in log space.
[[nodiscard]] inline double geometric_bound_hyp(double p, double x)
{
    if (!(p > 0.0)) throw std::domain_error("geometric_bound_hyp: p must be positive");
    const double y = std::fabs(p * x);
    // log cosh y = y + log1p(e^{-2y}) - log 2
    const double lc = y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
    return detail::require_finite(std::exp(lc / (3.0 * p * p)), "geometric_bound_hyp");
}

// Maclaurin coefficients (in x^2) of the evaluables above.

[[nodiscard]] inline EvenSeries sinc_series(std::size_t n = kSeriesTerms)
{
    std::vector<double> c(n);
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        c[k] = term;
        term *= -1.0 / (double(2 * k + 2) * double(2 * k + 3));
    }
    return EvenSeries(std::move(c));
}

[[nodiscard]] inline EvenSeries sinhc_series(std::size_t n = kSeriesTerms)
{
    std::vector<double> c(n);
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        c[k] = term;
        term *= 1.0 / (double(2 * k + 2) * double(2 * k + 3));
    }
    return EvenSeries(std::move(c));
}

namespace detail {

// 1, then sign^k p^(2k-2) / (3 (2k)!) for k >= 1
inline EvenSeries bound_series(double p, bool alternating, std::size_t n)
{
    std::vector<double> c(n, 0.0);
    c[0] = 1.0;
    if (n < 2) return EvenSeries(std::move(c));
    const double p2 = p * p;
    // k = 1: x^2 coefficient is -+1/6 for every p
    double term = alternating ? -1.0 / 6.0 : 1.0 / 6.0;
    for (std::size_t k = 1; k < n; ++k) {
        c[k] = term;
        const double step = p2 / (double(2 * k + 1) * double(2 * k + 2));
        term *= alternating ? -step : step;
    }
    return EvenSeries(std::move(c));
}

}  // namespace detail

[[nodiscard]] inline EvenSeries u_bound_series(double p, std::size_t n = kSeriesTerms)
{
    return detail::bound_series(p, true, n);
}

[[nodiscard]] inline EvenSeries v_bound_series(double p, std::size_t n = kSeriesTerms)
{
    return detail::bound_series(p, false, n);
}

namespace detail {

// The x^2 coefficient of (cos px)^(1/(3p^2)) is -1/6 for every p; pin it so the
// comparison with sinc and U_p cancels exactly at that order.
inline EvenSeries pin_quadratic(EvenSeries s, double value)
{
    if (s.size() > 1) s.add(1, value - s[1]);
    return s;
}

}  // namespace detail

[[nodiscard]] inline EvenSeries geometric_trig_series(double p, std::size_t n = kSeriesTerms)
{
    return detail::pin_quadratic(EvenSeries::cosine(p, n).power(1.0 / (3.0 * p * p)), -1.0 / 6.0);
}

[[nodiscard]] inline EvenSeries geometric_hyp_series(double p, std::size_t n = kSeriesTerms)
{
    return detail::pin_quadratic(EvenSeries::hyperbolic_cosine(p, n).power(1.0 / (3.0 * p * p)), 1.0 / 6.0);
}

/// U_q(x) - U_p(x), from the series near 0 and directly elsewhere.
[[nodiscard]] inline StableDifference u_bound_increment(double p, double q, double x)
{
    if (std::fabs(x) <= kSeriesSwitch) return series_difference(u_bound_series(q), u_bound_series(p), x);
    const double up = u_bound(BoundParam::trig(p), x);
    const double uq = u_bound(BoundParam::trig(q), x);
    return {uq - up, 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(up), std::fabs(uq))};
}

/// V_q(x) - V_p(x); p, q may be negative (V depends on p^2 only).
[[nodiscard]] inline StableDifference v_bound_increment(double p, double q, double x)
{
    if (std::fabs(x) <= kSeriesSwitch) return series_difference(v_bound_series(q), v_bound_series(p), x);
    const double vp = v_bound(BoundParam::hyperbolic(std::fabs(p)), x);
    const double vq = v_bound(BoundParam::hyperbolic(std::fabs(q)), x);
    return {vq - vp, 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(vp), std::fabs(vq))};
}

/// u_n(x) = (2n-4) a_n(p^2) x^(2n-5) / (3 (2n+1)!), the terms of f_p'(x).
[[nodiscard]] inline double leibniz_term(double p, int n, double x)
{
    if (n < 3) throw std::invalid_argument("leibniz_term: n must be >= 3");
    return double(2 * n - 4) * coeff_a(n, p * p) * std::pow(x, 2 * n - 5) /
           (3.0 * std::tgamma(double(2 * n + 2)));
}

/// u_{n+1}(x)/u_n(x) = (2n-2) a_{n+1} x^2 / ((2n-4)(2n+2)(2n+3) a_n).
[[nodiscard]] inline double leibniz_term_ratio(double p, int n, double x)
{
    if (n < 3) throw std::invalid_argument("leibniz_term_ratio: n must be >= 3");
    const double c = p * p;
    return double(2 * n - 2) * coeff_ratio(n, c) * x * x /
           (double(2 * n - 4) * double(2 * n + 2) * double(2 * n + 3));
}

/// 11 pi^2 / 360, the uniform bound on consecutive Leibniz term ratios over (0, pi/2).
inline constexpr double kLeibnizRatioBound = 11.0 * std::numbers::pi * std::numbers::pi / 360.0;

}  // namespace cusa
