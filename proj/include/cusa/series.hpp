#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cusa {

/// Absolute value of a quantity together with a bound on its evaluation error.
struct StableDifference {
    double value = 0.0;
    double error = 0.0;
};

/**
 * Truncated even power series  sum_k c[k] x^(2k).
 *
 * Every function handled by this library (sinc, sinhc, the U_p / V_p
 * families, the geometric forms) is even and analytic at the origin, so
 * coefficients are stored in the variable t = x^2.
 */
class EvenSeries {
public:
    EvenSeries() = default;
    explicit EvenSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] double operator[](std::size_t k) const { return c_.at(k); }
    [[nodiscard]] std::span<const double> coefficients() const noexcept { return c_; }

    [[nodiscard]] double evaluate(double x) const noexcept
    {
        const double t = x * x;
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// Adds v to the coefficient of x^(2k).
    EvenSeries& add(std::size_t k, double v)
    {
        if (k >= c_.size()) c_.resize(k + 1, 0.0);
        c_[k] += v;
        return *this;
    }

    [[nodiscard]] EvenSeries scaled(double s) const
    {
        std::vector<double> out(c_);
        for (double& v : out) v *= s;
        return EvenSeries(std::move(out));
    }

    /**
     * g^alpha by the J.C.P. Miller recurrence,
     *   f_0 = g_0^alpha,  f_k = 1/(k g_0) sum_{j=1..k} ((alpha+1) j - k) g_j f_{k-j}.
     * Requires g_0 > 0.
     */
    [[nodiscard]] EvenSeries power(double alpha) const
    {
        if (c_.empty() || !(c_[0] > 0.0))
            throw std::domain_error("EvenSeries::power: constant term must be positive");
        const std::size_t n = c_.size();
        std::vector<double> f(n, 0.0);
        f[0] = std::pow(c_[0], alpha);
        for (std::size_t k = 1; k < n; ++k) {
            double acc = 0.0;
            for (std::size_t j = 1; j <= k; ++j)
                acc += ((alpha + 1.0) * double(j) - double(k)) * c_[j] * f[k - j];
            f[k] = acc / (double(k) * c_[0]);
        }
        return EvenSeries(std::move(f));
    }

    [[nodiscard]] EvenSeries reciprocal() const { return power(-1.0); }

    /// Maclaurin coefficients of cos(p x).
    [[nodiscard]] static EvenSeries cosine(double p, std::size_t n)
    {
        std::vector<double> c(n);
        const double p2 = p * p;
        double term = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = term;
            term *= -p2 / (double(2 * k + 1) * double(2 * k + 2));
        }
        return EvenSeries(std::move(c));
    }

    /// Maclaurin coefficients of cosh(p x).
    [[nodiscard]] static EvenSeries hyperbolic_cosine(double p, std::size_t n)
    {
        std::vector<double> c(n);
        const double p2 = p * p;
        double term = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = term;
            term *= p2 / (double(2 * k + 1) * double(2 * k + 2));
        }
        return EvenSeries(std::move(c));
    }

private:
    std::vector<double> c_;
};

/**
 * rhs(x) - lhs(x) summed coefficient by coefficient.
 *
 * Coefficients that round to the same double are treated as equal and
 * contribute no error; the remaining ones are charged 8 ulps of their
 * magnitude.  Truncation is charged twice the magnitude of the last
 * retained term pair.
 */
[[nodiscard]] inline StableDifference series_difference(const EvenSeries& rhs, const EvenSeries& lhs,
                                                        double x)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t n = std::max(rhs.size(), lhs.size());
    const double t = x * x;
    auto at = [](const EvenSeries& s, std::size_t k) { return k < s.size() ? s[k] : 0.0; };

    double sum = 0.0;
    double abs_sum = 0.0;
    double coeff_err = 0.0;
    double tk = 1.0;
    double last = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = at(rhs, k);
        const double l = at(lhs, k);
        const double d = r - l;
        if (d != 0.0) {
            const double term = d * tk;
            sum += term;
            abs_sum += std::fabs(term);
            coeff_err += 8.0 * eps * (std::fabs(r) + std::fabs(l)) * tk;
        }
        last = (std::fabs(r) + std::fabs(l)) * tk;
        tk *= t;
    }
    return {sum, coeff_err + 2.0 * eps * abs_sum + 2.0 * last};
}

}  // namespace cusa
