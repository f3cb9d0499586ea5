#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusa/constants.hpp"
#include "cusa/core_bounds.hpp"
#include "cusa/integrals.hpp"
#include "cusa/means.hpp"
#include "cusa/verifier.hpp"

namespace cusa {

namespace detail {

inline Evaluable geometric_trig_evaluable(double p)
{
    return {"(cos " + format_param(p) + "x)^(1/(3p^2))", [p](double x) { return geometric_bound_trig(p, x); },
            geometric_trig_series(p)};
}

inline Evaluable geometric_hyp_evaluable(double p)
{
    return {"(cosh " + format_param(p) + "x)^(1/(3p^2))", [p](double x) { return geometric_bound_hyp(p, x); },
            geometric_hyp_series(p)};
}

}  // namespace detail

/**
 * The nine members of the trigonometric corollary chain on (0, pi/2), in
 * display order and in their printed closed forms.
 */
[[nodiscard]] inline std::vector<Evaluable> m1c_members()
{
    const double r2 = std::numbers::sqrt2;
    const double r3 = std::numbers::sqrt3;
    const double r6 = std::sqrt(6.0);
    const double r15 = std::sqrt(15.0);
    return {
        {"cos(x/sqrt3)", [r3](double x) { return std::cos(x / r3); }, u_bound_series(1.0 / r3)},
        {"3/4 cos(2x/3) + 1/4", [](double x) { return 0.75 * std::cos(2.0 * x / 3.0) + 0.25; },
         u_bound_series(2.0 / 3.0)},
        {"2/3 cos(x/sqrt2) + 1/3", [r2](double x) { return 2.0 / 3.0 * std::cos(x / r2) + 1.0 / 3.0; },
         u_bound_series(1.0 / r2)},
        {"16/27 cos(3x/4) + 11/27", [](double x) { return 16.0 / 27.0 * std::cos(0.75 * x) + 11.0 / 27.0; },
         u_bound_series(0.75)},
        sinc_evaluable(),
        {"5/9 cos(sqrt15 x/5) + 4/9", [r15](double x) { return 5.0 / 9.0 * std::cos(r15 * x / 5.0) + 4.0 / 9.0; },
         u_bound_series(r15 / 5.0)},
        {"cos^2(x/sqrt6)",
         [r6](double x) {
             const double c = std::cos(x / r6);
             return c * c;
         },
         u_bound_series(std::sqrt(2.0 / 3.0))},
        {"4/9 cos(sqrt3 x/2) + 5/9", [r3](double x) { return 4.0 / 9.0 * std::cos(r3 * x / 2.0) + 5.0 / 9.0; },
         u_bound_series(r3 / 2.0)},
        {"1/3 cos(x) + 2/3", [](double x) { return std::cos(x) / 3.0 + 2.0 / 3.0; }, u_bound_series(1.0)},
    };
}

/// The eight members of the hyperbolic corollary chain, valid for every x > 0.
[[nodiscard]] inline std::vector<Evaluable> m2c_members()
{
    const double r2 = std::numbers::sqrt2;
    const double r3 = std::numbers::sqrt3;
    const double r15 = std::sqrt(15.0);
    return {
        {"cosh(x/sqrt3)", [r3](double x) { return std::cosh(x / r3); }, v_bound_series(1.0 / r3)},
        {"3/4 cosh(2x/3) + 1/4", [](double x) { return 0.75 * std::cosh(2.0 * x / 3.0) + 0.25; },
         v_bound_series(2.0 / 3.0)},
        {"2/3 cosh(x/sqrt2) + 1/3", [r2](double x) { return 2.0 / 3.0 * std::cosh(x / r2) + 1.0 / 3.0; },
         v_bound_series(1.0 / r2)},
        {"16/27 cosh(3x/4) + 11/27", [](double x) { return 16.0 / 27.0 * std::cosh(0.75 * x) + 11.0 / 27.0; },
         v_bound_series(0.75)},
        {"5/9 cosh(sqrt15 x/5) + 4/9",
         [r15](double x) { return 5.0 / 9.0 * std::cosh(r15 * x / 5.0) + 4.0 / 9.0; }, v_bound_series(r15 / 5.0)},
        sinhc_evaluable(),
        {"1/3 cosh(x) + 2/3", [](double x) { return std::cosh(x) / 3.0 + 2.0 / 3.0; }, v_bound_series(1.0)},
        {"1/2 cosh^2(x/sqrt3) + 1/2",
         [r3](double x) {
             const double c = std::cosh(x / r3);
             return 0.5 * c * c + 0.5;
         },
         v_bound_series(2.0 / r3)},
    };
}

/// Parameters of the mean chain, in order; L sits between the fifth and sixth.
[[nodiscard]] inline std::vector<double> mean_chain_parameters()
{
    return {1.0 / std::numbers::sqrt3, 2.0 / 3.0, 1.0 / std::numbers::sqrt2, 0.75, std::sqrt(15.0) / 5.0,
            1.0, 2.0 / std::numbers::sqrt3};
}

struct MeanChainMember {
    std::string name;
    double value = 0.0;
};

/// The mean chain evaluated at one pair, in display order.
[[nodiscard]] inline std::vector<MeanChainMember> mean_chain(const MeanPoint& m)
{
    std::vector<MeanChainMember> out;
    const std::vector<double> ps = mean_chain_parameters();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i == 5) out.push_back({"L", log_mean(m)});
        out.push_back({"M_" + format_param(ps[i]), mean_family(ps[i], m)});
    }
    return out;
}

/// Sampled parameters for the four orderings against the geometric forms.
struct RemarkSamples {
    std::vector<double> trig_low{0.46, 0.5, 0.55};    ///< inside [p1*, 1/sqrt3)
    std::vector<double> trig_high{0.6, 0.7, 0.77};    ///< inside (1/sqrt3, p0)
    std::vector<double> hyp_low{0.46, 0.5, 0.55};     ///< inside [1/sqrt5, 1/sqrt3)
    std::vector<double> hyp_high{0.6, 0.7, 0.77};     ///< inside (1/sqrt3, sqrt15/5)
};

/**
 * For each sampled p:
 *   (i)   U_p < (cos px)^(1/(3p^2)) < sin(x)/x
 *   (ii)  (cos px)^(1/(3p^2)) < U_p < sin(x)/x
 *   (iii) V_p < (cosh px)^(1/(3p^2)) < sinh(x)/x
 *   (iv)  (cosh px)^(1/(3p^2)) < V_p < sinh(x)/x
 */
[[nodiscard]] inline std::vector<InequalityCase> remark_cases(const RemarkSamples& s = {})
{
    const Interval trig{0.0, std::numbers::pi / 2.0};
    const Interval hyp{0.0, kHyperbolicDomainEnd};
    std::vector<InequalityCase> out;
    for (double p : s.trig_low) {
        const std::string tag = "Ordering (i) p=" + format_param(p);
        out.push_back({tag + " U<geo", u_evaluable(p), detail::geometric_trig_evaluable(p), trig, true});
        out.push_back({tag + " geo<sinc", detail::geometric_trig_evaluable(p), sinc_evaluable(), trig, true});
    }
    for (double p : s.trig_high) {
        const std::string tag = "Ordering (ii) p=" + format_param(p);
        out.push_back({tag + " geo<U", detail::geometric_trig_evaluable(p), u_evaluable(p), trig, true});
        out.push_back({tag + " U<sinc", u_evaluable(p), sinc_evaluable(), trig, true});
    }
    for (double p : s.hyp_low) {
        const std::string tag = "Ordering (iii) p=" + format_param(p);
        out.push_back({tag + " V<geo", v_evaluable(p), detail::geometric_hyp_evaluable(p), hyp, true});
        out.push_back({tag + " geo<sinhc", detail::geometric_hyp_evaluable(p), sinhc_evaluable(), hyp, true});
    }
    for (double p : s.hyp_high) {
        const std::string tag = "Ordering (iv) p=" + format_param(p);
        out.push_back({tag + " geo<V", detail::geometric_hyp_evaluable(p), v_evaluable(p), hyp, true});
        out.push_back({tag + " V<sinhc", v_evaluable(p), sinhc_evaluable(), hyp, true});
    }
    return out;
}

/// (cosh q0 x)^(1/(3 q0^2)) < V_{p1}(x) on (0, 30), i.e. D(x) > 0.
[[nodiscard]] inline InequalityCase lower_bound_comparison_case()
{
    const DCoefficients k;
    return {"D(x) > 0", detail::geometric_hyp_evaluable(k.q0), v_evaluable(k.p1), {0.0, 30.0}, true};
}

/**
 * The integrand orderings behind the Catalan and Sh enclosures.  The Sh pair
 * stops at x = 30, where both sides are still far above the absolute
 * rounding floor of the margin test.
 */
[[nodiscard]] inline std::vector<InequalityCase> integrand_cases()
{
    const double r15 = std::sqrt(15.0);
    const Evaluable over_sin{"x/sin(x)", [](double x) { return 1.0 / sinc(x); }, sinc_series().reciprocal()};
    const Evaluable over_sinh{"x/sinh(x)", [](double x) { return 1.0 / sinhc(x); }, sinhc_series().reciprocal()};
    return {
        {"Catalan integrand lower",
         {"1/(5/9 cos(sqrt15 x/5) + 4/9)", [](double x) { return catalan_lower_integrand(x); },
          u_bound_series(r15 / 5.0).reciprocal()},
         over_sin,
         {0.0, std::numbers::pi / 2.0},
         true},
        {"Catalan integrand upper",
         over_sin,
         {"1/(16/27 cos(3x/4) + 11/27)", [](double x) { return catalan_upper_integrand(x); },
          u_bound_series(0.75).reciprocal()},
         {0.0, std::numbers::pi / 2.0},
         true},
        {"Sh integrand lower",
         {"3/(cosh(x) + 2)", [](double x) { return 3.0 / (std::cosh(x) + 2.0); }, v_bound_series(1.0).reciprocal()},
         over_sinh,
         {0.0, 30.0},
         true},
        {"Sh integrand upper",
         over_sinh,
         {"9/(5 cosh(sqrt15 x/5) + 4)", [r15](double x) { return 9.0 / (5.0 * std::cosh(r15 * x / 5.0) + 4.0); },
          v_bound_series(r15 / 5.0).reciprocal()},
         {0.0, 30.0},
         true},
    };
}

/// U_p + c_lo x^4 < sin(x)/x < U_p + c_hi x^4 on (0, pi/2).
[[nodiscard]] inline std::vector<InequalityCase> quartic_cases(double p)
{
    const QuarticBound q = quartic_constants(BoundParam::trig(p));
    const std::string tag = "quartic p=" + format_param(p);
    EvenSeries lo_series = u_bound_series(p);
    lo_series.add(2, q.c_lo);
    EvenSeries hi_series = u_bound_series(p);
    hi_series.add(2, q.c_hi);
    const Interval dom{0.0, std::numbers::pi / 2.0};
    return {
        {tag + " lower", {"U_p + c0 x^4", [q](double x) { return quartic_bound_eval(q, x, Side::Lower); }, lo_series},
         sinc_evaluable(), dom, true},
        {tag + " upper", sinc_evaluable(),
         {"U_p + c1 x^4", [q](double x) { return quartic_bound_eval(q, x, Side::Upper); }, hi_series}, dom, true},
    };
}

enum class Suite { All, Theorem1, Theorem2, Chains, Propositions, Remarks };

[[nodiscard]] inline const char* to_string(Suite s) noexcept
{
    switch (s) {
    case Suite::All: return "All";
    case Suite::Theorem1: return "Theorem1";
    case Suite::Theorem2: return "Theorem2";
    case Suite::Chains: return "Chains";
    case Suite::Propositions: return "Propositions";
    case Suite::Remarks: return "Remarks";
    }
    return "?";
}

[[nodiscard]] inline std::optional<Suite> suite_from_string(const std::string& s) noexcept
{
    for (Suite v : {Suite::All, Suite::Theorem1, Suite::Theorem2, Suite::Chains, Suite::Propositions, Suite::Remarks})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

/**
 * The registered corpus of one suite.  Every case here is a claim that
 * should hold; sharpness counterexamples are exercised separately.
 */
[[nodiscard]] inline std::vector<InequalityCase> suite_cases(Suite suite)
{
    std::vector<InequalityCase> out;
    auto take = [&out](std::vector<InequalityCase> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Theorem1) {
        const double p0 = sharp_p0().value;
        for (double p : {0.1, 0.5, 0.7, p0 - 1e-6}) out.push_back(m1_lower_case(p));
        for (double q : {p1().value, 0.9, 1.0}) out.push_back(m1_upper_case(q));
    }
    if (all || suite == Suite::Theorem2) {
        for (double p : {0.5, p1().value}) out.push_back(m2_lower_case(p));
        for (double q : {1.0, 1.5}) out.push_back(m2_upper_case(q));
        out.push_back(m2_upper_asymptotic_case(1.0));
    }
    if (all || suite == Suite::Chains) {
        auto chain = [&out](const std::vector<Evaluable>& m, Interval dom, const std::string& tag) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                out.push_back({tag + ": " + m[i].name + " < " + m[i + 1].name, m[i], m[i + 1], dom, true});
        };
        chain(m1c_members(), {0.0, std::numbers::pi / 2.0}, "M1c");
        chain(m2c_members(), {0.0, 20.0}, "M2c");
    }
    if (all || suite == Suite::Propositions) {
        take(integrand_cases());
        for (double p : {p1().value, sharp_p0().value, 2.0 / 3.0}) take(quartic_cases(p));
        out.push_back(lower_bound_comparison_case());
    }
    if (all || suite == Suite::Remarks) take(remark_cases());
    return out;
}

/// Twenty-one evenly spaced parameters on [0, 3].
[[nodiscard]] inline std::vector<double> mean_family_parameter_grid()
{
    std::vector<double> ps;
    for (int i = 0; i <= 20; ++i) ps.push_back(0.15 * i);
    return ps;
}

/**
 * Checks over seeded random pairs: the SB lower bound, both sides of the
 * logarithmic-mean sandwich, and the increase of the mean family in p.
 */
[[nodiscard]] inline std::vector<VerificationReport> pair_checks(std::uint64_t seed, std::size_t count)
{
    const std::vector<MeanPoint> pairs = random_mean_points(count, seed);
    std::vector<VerificationReport> out;
    out.push_back(verify_pairs("SB lower bound", pairs, [](const MeanPoint& m) {
        return PairMargin{sb_lower_bound(m), sb_mean(m), sb_lower_bound_gap(m)};
    }));
    out.push_back(verify_pairs("log-mean sandwich lower", pairs, [](const MeanPoint& m) {
        const Enclosure e = log_mean_sandwich(m);
        return PairMargin{e.lo, log_mean(m), log_mean_sandwich_margins(m).below};
    }));
    out.push_back(verify_pairs("log-mean sandwich upper", pairs, [](const MeanPoint& m) {
        const Enclosure e = log_mean_sandwich(m);
        return PairMargin{log_mean(m), e.hi, log_mean_sandwich_margins(m).above};
    }));
    out.push_back(verify_param_monotone(MonotoneFamily::MeanFamily, mean_family_parameter_grid(), pairs));
    return out;
}

/// An M1 lower-bound case at an arbitrary p, for fault injection.
[[nodiscard]] inline InequalityCase injected_lower_case(double p) { return m1_lower_case(p); }

}  // namespace cusa
