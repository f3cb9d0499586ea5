#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cusa {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// Kronrod 15-point abscissae / weights and the embedded 7-point Gauss weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

}  // namespace detail

/**
 * Adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
 *
 * The segment with the largest error estimate is bisected until the summed
 * estimate falls below abs_tol.  Ties are broken by position and the final
 * sum runs in left-to-right order, so results are bit-reproducible.
 * Throws std::runtime_error when max_evaluations is exhausted.
 */
template <class F>
QuadratureResult integrate(F f, double a, double b, double abs_tol = 1e-12,
                           std::size_t max_evaluations = 1'000'000)
{
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};
    const double sign = a < b ? 1.0 : -1.0;
    if (b < a) std::swap(a, b);

    auto worse = [](const detail::Segment& l, const detail::Segment& r) {
        if (l.error != r.error) return l.error < r.error;
        return l.a > r.a;
    };
    std::priority_queue<detail::Segment, std::vector<detail::Segment>, decltype(worse)> queue(worse);

    std::size_t evaluations = 15;
    queue.push(detail::gauss_kronrod_15(f, a, b));
    double total_error = queue.top().error;
    while (total_error > abs_tol) {
        if (evaluations + 30 > max_evaluations)
            throw std::runtime_error("integrate: evaluation budget exhausted");
        const detail::Segment s = queue.top();
        queue.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {
            // cannot split further at double resolution
            queue.push(s);
            break;
        }
        const detail::Segment left = detail::gauss_kronrod_15(f, s.a, mid);
        const detail::Segment right = detail::gauss_kronrod_15(f, mid, s.b);
        evaluations += 30;
        total_error += left.error + right.error - s.error;
        queue.push(left);
        queue.push(right);
    }

    std::vector<detail::Segment> segments;
    segments.reserve(queue.size());
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const detail::Segment& l, const detail::Segment& r) { return l.a < r.a; });
    double value = 0.0;
    double error = 0.0;
    for (const auto& s : segments) {
        value += s.value;
        error += s.error;
    }
    return {sign * value, error, evaluations};
}

}  // namespace cusa
