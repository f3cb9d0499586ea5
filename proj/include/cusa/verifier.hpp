#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cusa/constants.hpp"
#include "cusa/core_bounds.hpp"
#include "cusa/means.hpp"
#include "cusa/series.hpp"

namespace cusa {

/// A named real function, optionally with its Maclaurin series in x^2 for use near 0.
struct Evaluable {
    std::string name;
    std::function<double(double)> eval;
    std::optional<EvenSeries> series;
};

/// Open interval (lo, hi); endpoints are never sampled.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// The claim lhs(x) < rhs(x) on an open domain.
struct InequalityCase {
    std::string id;
    Evaluable lhs;
    Evaluable rhs;
    Interval domain;
    bool strict = true;
};

enum class Verdict { Holds, Fails, Inconclusive };

[[nodiscard]] inline const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

[[nodiscard]] inline std::optional<Verdict> verdict_from_string(const std::string& s) noexcept
{
    if (s == "Holds") return Verdict::Holds;
    if (s == "Fails") return Verdict::Fails;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    return std::nullopt;
}

struct Violation {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/**
 * Outcome of one check.  Fails always comes with a stored counterexample;
 * Holds means every sampled margin cleared its rounding floor, which is
 * evidence and not a proof.
 */
struct VerificationReport {
    std::string case_id;
    std::size_t grid_points = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double argmin_x = 0.0;
    std::vector<Violation> violations;  ///< at most kMaxStoredViolations: the first and last halves, in x order
    std::size_t violation_count = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::string diagnostic;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline constexpr std::size_t kMaxStoredViolations = 32;
inline constexpr std::size_t kRefineFocus = 5;
inline constexpr std::size_t kMinGridPoints = 64;

namespace detail {

struct Sample {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double floor = 0.0;
};

/**
 * Margin rhs - lhs and its rounding floor.  Where both sides carry series
 * and |x| <= 1/2, the difference is summed term by term and the floor is the
 * error bound of that sum; elsewhere the floor is 64 ulps of the larger side.
 */
inline Sample sample(const InequalityCase& c, double x)
{
    Sample s;
    s.x = x;
    s.lhs = c.lhs.eval(x);
    s.rhs = c.rhs.eval(x);
    if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs)) throw std::runtime_error("non-finite value");
    if (std::fabs(x) <= kSeriesSwitch && c.lhs.series && c.rhs.series) {
        const StableDifference d = series_difference(*c.rhs.series, *c.lhs.series, x);
        s.margin = d.value;
        s.floor = d.error;
    } else {
        s.margin = s.rhs - s.lhs;
        s.floor = 64.0 * std::numeric_limits<double>::epsilon() *
                  std::max({1.0, std::fabs(s.lhs), std::fabs(s.rhs)});
    }
    return s;
}

// Holds / Fails / Inconclusive from a finished sample set, reduced in x order.
inline VerificationReport reduce(const std::string& id, std::vector<Sample> samples, bool strict)
{
    std::stable_sort(samples.begin(), samples.end(), [](const Sample& l, const Sample& r) { return l.x < r.x; });
    VerificationReport r;
    r.case_id = id;
    r.grid_points = samples.size();
    bool all_clear = true;
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        if (s.margin < r.min_margin) {
            r.min_margin = s.margin;
            r.argmin_x = s.x;
        }
        if (s.margin < -s.floor)
            bad.push_back(i);
        else if (strict && !(s.margin > s.floor))
            all_clear = false;
    }
    // keep both ends of the violation set so separated failure regions stay visible
    r.violation_count = bad.size();
    const std::size_t half = kMaxStoredViolations / 2;
    for (std::size_t k = 0; k < bad.size(); ++k) {
        if (bad.size() > kMaxStoredViolations && k >= half && k < bad.size() - half) continue;
        const Sample& s = samples[bad[k]];
        r.violations.push_back({s.x, s.lhs, s.rhs});
    }
    if (r.violation_count > 0)
        r.verdict = Verdict::Fails;
    else
        r.verdict = all_clear ? Verdict::Holds : Verdict::Inconclusive;
    if (r.verdict == Verdict::Inconclusive) r.diagnostic = "margin within rounding floor";
    return r;
}

inline VerificationReport inconclusive(const std::string& id, std::size_t points, double x, const std::string& what)
{
    VerificationReport r;
    r.case_id = id;
    r.grid_points = points;
    r.argmin_x = x;
    r.verdict = Verdict::Inconclusive;
    r.diagnostic = "evaluation failed at x = " + std::to_string(x) + ": " + what;
    return r;
}

}  // namespace detail

/**
 * Checks lhs < rhs on `points` uniformly spaced interior points of the
 * domain, then for each refinement round adds x +- h/3 and x +- 2h/3 around
 * the five smallest margins (h shrinking by 3 each round).
 */
[[nodiscard]] inline VerificationReport verify(const InequalityCase& c, std::size_t points, std::size_t refine_rounds = 2)
{
    if (points < kMinGridPoints) throw std::invalid_argument("verify: at least 64 grid points required");
    const double lo = c.domain.lo;
    const double hi = c.domain.hi;
    if (!(lo < hi)) throw std::invalid_argument("verify: empty domain");

    double h = (hi - lo) / double(points + 1);
    std::vector<detail::Sample> samples;
    samples.reserve(points + refine_rounds * kRefineFocus * 4);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lo + double(i + 1) * h;
        try {
            samples.push_back(detail::sample(c, x));
        } catch (const std::exception& e) {
            return detail::inconclusive(c.id, samples.size(), x, e.what());
        }
    }

    for (std::size_t round = 0; round < refine_rounds; ++round) {
        std::vector<std::size_t> order(samples.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        const std::size_t focus = std::min(kRefineFocus, order.size());
        std::partial_sort(order.begin(), order.begin() + std::ptrdiff_t(focus), order.end(),
                          [&](std::size_t l, std::size_t r) {
                              if (samples[l].margin != samples[r].margin) return samples[l].margin < samples[r].margin;
                              return samples[l].x < samples[r].x;
                          });
        std::vector<double> centers;
        for (std::size_t k = 0; k < focus; ++k) centers.push_back(samples[order[k]].x);
        for (double center : centers) {
            for (double offset : {-2.0 * h / 3.0, -h / 3.0, h / 3.0, 2.0 * h / 3.0}) {
                const double x = center + offset;
                if (!(x > lo && x < hi)) continue;
                try {
                    samples.push_back(detail::sample(c, x));
                } catch (const std::exception& e) {
                    return detail::inconclusive(c.id, samples.size(), x, e.what());
                }
            }
        }
        h /= 3.0;
    }
    return detail::reduce(c.id, std::move(samples), c.strict);
}

/// Adjacent links m[0] < m[1] < ... as separate reports.
[[nodiscard]] inline std::vector<VerificationReport> verify_chain(const std::vector<Evaluable>& members, Interval domain,
                                                                  std::size_t points, std::size_t refine_rounds = 2)
{
    if (members.size() < 2) throw std::invalid_argument("verify_chain: need at least two members");
    std::vector<VerificationReport> out;
    out.reserve(members.size() - 1);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        const InequalityCase link{members[i].name + " < " + members[i + 1].name, members[i], members[i + 1], domain,
                                  true};
        out.push_back(verify(link, points, refine_rounds));
    }
    return out;
}

[[nodiscard]] inline bool all_hold(const std::vector<VerificationReport>& reports) noexcept
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.verdict == Verdict::Holds; });
}

enum class MonotoneFamily { UTrig, VHyp, MeanFamily };

namespace detail {

inline void require_increasing(const std::vector<double>& grid)
{
    if (grid.size() < 2) throw std::invalid_argument("verify_param_monotone: need at least two parameters");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw std::invalid_argument("verify_param_monotone: grid must increase");
}

// One sample per (adjacent parameter pair, abscissa), using the stable increment.
template <class Increment, class Values>
VerificationReport monotone_scan(const std::string& id, const std::vector<double>& p_grid,
                                 const std::vector<double>& xs, Increment&& increment, Values&& values)
{
    std::vector<Sample> samples;
    samples.reserve(xs.size() * (p_grid.size() - 1));
    for (std::size_t j = 0; j < xs.size(); ++j) {
        for (std::size_t i = 0; i + 1 < p_grid.size(); ++i) {
            Sample s;
            s.x = xs[j];
            try {
                const StableDifference d = increment(p_grid[i], p_grid[i + 1], j);
                const auto [lo, hi] = values(p_grid[i], p_grid[i + 1], j);
                s.lhs = lo;
                s.rhs = hi;
                s.margin = d.value;
                s.floor = d.error;
            } catch (const std::exception& e) {
                return inconclusive(id, samples.size(), xs[j], e.what());
            }
            samples.push_back(s);
        }
    }
    return reduce(id, std::move(samples), true);
}

}  // namespace detail

/**
 * Strict increase of U_p(x) or V_p(x) along an increasing p grid at each x.
 * Violations record (x, value at the smaller p, value at the larger p).
 */
[[nodiscard]] inline VerificationReport verify_param_monotone(MonotoneFamily family, const std::vector<double>& p_grid,
                                                              const std::vector<double>& x_grid)
{
    detail::require_increasing(p_grid);
    if (family == MonotoneFamily::UTrig) {
        return detail::monotone_scan(
            "U_p increasing in p", p_grid, x_grid,
            [&](double p, double q, std::size_t j) { return u_bound_increment(p, q, x_grid[j]); },
            [&](double p, double q, std::size_t j) {
                return std::pair{u_bound(BoundParam::trig(p), x_grid[j]), u_bound(BoundParam::trig(q), x_grid[j])};
            });
    }
    if (family == MonotoneFamily::VHyp) {
        return detail::monotone_scan(
            "V_p increasing in p", p_grid, x_grid,
            [&](double p, double q, std::size_t j) { return v_bound_increment(p, q, x_grid[j]); },
            [&](double p, double q, std::size_t j) {
                return std::pair{v_bound(BoundParam::hyperbolic(std::fabs(p)), x_grid[j]),
                                 v_bound(BoundParam::hyperbolic(std::fabs(q)), x_grid[j])};
            });
    }
    throw std::invalid_argument("verify_param_monotone: MeanFamily takes mean points");
}

/// Strict increase of mean_family(p, m) along p_grid for every pair; x records ln(a/b)/2.
[[nodiscard]] inline VerificationReport verify_param_monotone(MonotoneFamily family, const std::vector<double>& p_grid,
                                                              const std::vector<MeanPoint>& pairs)
{
    if (family != MonotoneFamily::MeanFamily)
        throw std::invalid_argument("verify_param_monotone: mean points only apply to MeanFamily");
    detail::require_increasing(p_grid);
    std::vector<double> xs;
    xs.reserve(pairs.size());
    for (const MeanPoint& m : pairs) xs.push_back(m.hyperbolic_argument());
    return detail::monotone_scan(
        "mean family increasing in p", p_grid, xs,
        [&](double p, double q, std::size_t j) { return mean_family_increment(p, q, pairs[j]); },
        [&](double p, double q, std::size_t j) {
            return std::pair{mean_family(p, pairs[j]), mean_family(q, pairs[j])};
        });
}

/// Margin data of one mean pair: the two sides and their stable difference rhs - lhs.
struct PairMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    StableDifference margin;
};

/**
 * lhs(m) < rhs(m) over a list of mean pairs.  The reported x of each pair is
 * ln(a/b)/2; `margin_of` supplies the margin computed without cancellation.
 */
template <class MarginOf>
[[nodiscard]] VerificationReport verify_pairs(const std::string& id, const std::vector<MeanPoint>& pairs,
                                              MarginOf&& margin_of)
{
    std::vector<detail::Sample> samples;
    samples.reserve(pairs.size());
    for (const MeanPoint& m : pairs) {
        const double x = m.hyperbolic_argument();
        try {
            const PairMargin pm = margin_of(m);
            samples.push_back({x, pm.lhs, pm.rhs, pm.margin.value, pm.margin.error});
        } catch (const std::exception& e) {
            return detail::inconclusive(id, samples.size(), x, e.what());
        }
    }
    return detail::reduce(id, std::move(samples), true);
}

/// Which of the four bound statements a sharpness check is about.
enum class BoundKind {
    TrigLower,  ///< U_p < sinc on (0, pi/2), sharp at p0
    TrigUpper,  ///< sinc < U_q on (0, pi/2), sharp at p1
    HypLower,   ///< V_p < sinhc on (0, 50), sharp at p1
    HypUpper,   ///< sinhc < V_q for large x, sharp at 1
};

enum class ApproachSide { Below, Above };

inline constexpr double kHyperbolicDomainEnd = 50.0;
inline constexpr double kAsymptoticDomainEnd = 2.0e4;

[[nodiscard]] inline std::string format_param(double p)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", p);
    return buf;
}

[[nodiscard]] inline Evaluable sinc_evaluable()
{
    return {"sin(x)/x", [](double x) { return sinc(x); }, sinc_series()};
}

[[nodiscard]] inline Evaluable sinhc_evaluable()
{
    return {"sinh(x)/x", [](double x) { return sinhc(x); }, sinhc_series()};
}

[[nodiscard]] inline Evaluable u_evaluable(double p)
{
    const BoundParam bp = BoundParam::trig(p);
    return {"U_" + format_param(p), [bp](double x) { return u_bound(bp, x); }, u_bound_series(p)};
}

[[nodiscard]] inline Evaluable v_evaluable(double p)
{
    const BoundParam bp = BoundParam::hyperbolic(p);
    return {"V_" + format_param(p), [bp](double x) { return v_bound(bp, x); }, v_bound_series(p)};
}

/// U_p < sin(x)/x on (0, pi/2).
[[nodiscard]] inline InequalityCase m1_lower_case(double p)
{
    return {"M1 lower p=" + format_param(p), u_evaluable(p), sinc_evaluable(), {0.0, std::numbers::pi / 2.0}, true};
}

/// sin(x)/x < U_q on (0, pi/2).
[[nodiscard]] inline InequalityCase m1_upper_case(double q)
{
    return {"M1 upper q=" + format_param(q), sinc_evaluable(), u_evaluable(q), {0.0, std::numbers::pi / 2.0}, true};
}

/// V_p < sinh(x)/x on (0, xmax).
[[nodiscard]] inline InequalityCase m2_lower_case(double p, double xmax = kHyperbolicDomainEnd)
{
    return {"M2 lower p=" + format_param(p), v_evaluable(p), sinhc_evaluable(), {0.0, xmax}, true};
}

/// sinh(x)/x < V_q on (0, xmax).
[[nodiscard]] inline InequalityCase m2_upper_case(double q, double xmax = kHyperbolicDomainEnd)
{
    return {"M2 upper q=" + format_param(q), sinhc_evaluable(), v_evaluable(q), {0.0, xmax}, true};
}

/**
 * e^-x sinh(x)/x < e^-x V_q(x) on (50, 2e4): the upper bound of the
 * hyperbolic family past the overflow range of cosh.
 */
[[nodiscard]] inline InequalityCase m2_upper_asymptotic_case(double q)
{
    const BoundParam bp = BoundParam::hyperbolic(q);
    Evaluable lhs{"e^-x sinh(x)/x", [](double x) { return scaled_sinhc(x, 1.0); }, std::nullopt};
    Evaluable rhs{"e^-x V_" + format_param(q), [bp](double x) { return scaled_v_bound(bp, x, 1.0); }, std::nullopt};
    return {"M2 upper (scaled) q=" + format_param(q), std::move(lhs), std::move(rhs),
            {kHyperbolicDomainEnd, kAsymptoticDomainEnd}, true};
}

/// Holds for the side where the family is still a valid bound, Fails past the threshold.
[[nodiscard]] inline Verdict expected_sharpness_verdict(BoundKind kind, ApproachSide side) noexcept
{
    const bool lower = kind == BoundKind::TrigLower || kind == BoundKind::HypLower;
    const bool below = side == ApproachSide::Below;
    return lower == below ? Verdict::Holds : Verdict::Fails;
}

/**
 * Evaluates the bound family at threshold -+ offset.  Lower families must
 * hold below their threshold and fail above it; upper families the reverse.
 * HypUpper is judged on the scaled asymptotic domain where the failure lives.
 */
[[nodiscard]] inline VerificationReport verify_sharpness(const SharpConstant& threshold, ApproachSide side,
                                                         double offset, BoundKind kind, std::size_t points = 20000,
                                                         std::size_t refine_rounds = 2)
{
    if (!(offset > 0.0) || offset < 10.0 * threshold.certified_radius)
        throw std::invalid_argument("verify_sharpness: offset must be positive and at least 10 certified radii");
    const double p = side == ApproachSide::Below ? threshold.value - offset : threshold.value + offset;
    switch (kind) {
    case BoundKind::TrigLower: return verify(m1_lower_case(p), points, refine_rounds);
    case BoundKind::TrigUpper: return verify(m1_upper_case(p), points, refine_rounds);
    case BoundKind::HypLower: return verify(m2_lower_case(p), points, refine_rounds);
    case BoundKind::HypUpper: return verify(m2_upper_asymptotic_case(p), points, refine_rounds);
    }
    throw std::invalid_argument("verify_sharpness: unknown bound kind");
}

/**
 * Checks u_{n+1}(x)/u_n(x) < 11 pi^2/360 for n = 3..n_max on a uniform
 * interior grid of (0, pi/2).  The reported x of a violation is the abscissa;
 * lhs holds the ratio and rhs the bound.
 */
[[nodiscard]] inline VerificationReport verify_leibniz_ratio(const BoundParam& p, int n_max, std::size_t points = 1000)
{
    detail::require_family(p, Family::Trig, "verify_leibniz_ratio");
    const double c = p.value() * p.value();
    if (!(c > 0.0 && c <= 0.6 * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())))
        throw std::invalid_argument("verify_leibniz_ratio: need p^2 in (0, 3/5]");
    if (n_max < 4) throw std::invalid_argument("verify_leibniz_ratio: n_max must be >= 4");
    const double h = std::numbers::pi / 2.0 / double(points + 1);
    std::vector<detail::Sample> samples;
    samples.reserve(points * std::size_t(n_max - 2));
    for (std::size_t i = 0; i < points; ++i) {
        const double x = double(i + 1) * h;
        for (int n = 3; n <= n_max; ++n) {
            detail::Sample s;
            s.x = x;
            s.lhs = leibniz_term_ratio(p.value(), n, x);
            s.rhs = kLeibnizRatioBound;
            s.margin = s.rhs - s.lhs;
            s.floor = 64.0 * std::numeric_limits<double>::epsilon();
            samples.push_back(s);
        }
    }
    return detail::reduce("Leibniz ratio p=" + format_param(p.value()), std::move(samples), true);
}

}  // namespace cusa
