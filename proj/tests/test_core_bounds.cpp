#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cusa/core_bounds.hpp"

using cusa::BoundParam;
using cusa::GapMethod;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(BoundParam, ValidatesRanges)
{
    EXPECT_NO_THROW((void)BoundParam::trig(0.0));
    EXPECT_NO_THROW((void)BoundParam::trig(1.0));
    EXPECT_THROW((void)BoundParam::trig(1.0000001), std::domain_error);
    EXPECT_THROW((void)BoundParam::trig(-0.1), std::domain_error);
    EXPECT_THROW((void)BoundParam::hyperbolic(std::numeric_limits<double>::infinity()), std::domain_error);
    EXPECT_TRUE(BoundParam::hyperbolic(0.0).is_limit());
    EXPECT_EQ(BoundParam::hyperbolic(2.5).family(), cusa::Family::Hyperbolic);
}

TEST(BoundParam, WrongFamilyRejected)
{
    EXPECT_THROW((void)cusa::u_bound(BoundParam::hyperbolic(0.5), 1.0), std::invalid_argument);
    EXPECT_THROW((void)cusa::v_bound(BoundParam::trig(0.5), 1.0), std::invalid_argument);
}

TEST(Sinc, ReferenceValues)
{
    EXPECT_EQ(cusa::sinc(0.0), 1.0);
    EXPECT_NEAR(cusa::sinc(kPi / 2.0), 2.0 / kPi, 4 * kEps);
    EXPECT_NEAR(cusa::sinc(1.0), 0.841470984807897, 1e-15);
    EXPECT_EQ(cusa::sinc(-0.3), cusa::sinc(0.3));
    EXPECT_NEAR(cusa::sinc(1e-7), 1.0 - 1e-14 / 6.0, kEps);
}

TEST(Sinhc, ReferenceValues)
{
    EXPECT_EQ(cusa::sinhc(0.0), 1.0);
    EXPECT_NEAR(cusa::sinhc(1.0), 1.1752011936438014, 4 * kEps * 1.18);
    EXPECT_EQ(cusa::sinhc(-2.0), cusa::sinhc(2.0));
}

TEST(Sinhc, LargeArgumentsAndOverflow)
{
    // sinh(710)/710 is representable although sinh(710) is not
    const double v = cusa::sinhc(710.0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(std::log(v), 710.0 - std::log(1420.0), 1e-12);
    EXPECT_THROW((void)cusa::sinhc(1000.0), std::overflow_error);
}

TEST(UBound, ClosedForms)
{
    for (double x : {0.3, 1.0, kPi / 2.0})
        EXPECT_NEAR(cusa::u_bound(BoundParam::trig(1.0), x), (std::cos(x) + 2.0) / 3.0, 2 * kEps);
    EXPECT_NEAR(cusa::u_bound(BoundParam::trig(1.0), kPi / 2.0), 2.0 / 3.0, 2 * kEps);
    EXPECT_DOUBLE_EQ(cusa::u_bound(BoundParam::trig(0.0), 1.0), 5.0 / 6.0);
    // half-angle identity: U_{sqrt(2/3)}(x) = cos^2(x/sqrt6)
    EXPECT_NEAR(cusa::u_bound(BoundParam::trig(std::sqrt(2.0 / 3.0)), std::sqrt(6.0) * kPi / 3.0), 0.25, 4 * kEps);
    EXPECT_THROW((void)cusa::u_bound(BoundParam::trig(0.5), kPi), std::domain_error);
}

TEST(UBound, ContinuousAtZeroParameter)
{
    for (double x : {0.2, 1.0, 1.5})
        EXPECT_NEAR(cusa::u_bound(BoundParam::trig(1e-6), x), cusa::u_bound(BoundParam::trig(0.0), x), 1e-12);
}

TEST(VBound, ClosedForms)
{
    for (double x : {0.3, 1.0, 7.0})
        EXPECT_NEAR(cusa::v_bound(BoundParam::hyperbolic(1.0), x) / ((std::cosh(x) + 2.0) / 3.0), 1.0, 4 * kEps);
    EXPECT_DOUBLE_EQ(cusa::v_bound(BoundParam::hyperbolic(0.0), 1.0), 7.0 / 6.0);
    const double p = 2.0 / std::sqrt(3.0);
    for (double x : {0.5, 2.0, 10.0}) {
        const double c = std::cosh(x / std::sqrt(3.0));
        EXPECT_NEAR(cusa::v_bound(BoundParam::hyperbolic(p), x) / (0.5 * c * c + 0.5), 1.0, 8 * kEps);
    }
    EXPECT_THROW((void)cusa::v_bound(BoundParam::hyperbolic(2.0), 800.0), std::overflow_error);
}

TEST(GapTrig, EndpointValues)
{
    const auto f1 = cusa::gap_trig(BoundParam::trig(1.0), kPi / 2.0);
    EXPECT_EQ(f1.method, GapMethod::Direct);
    EXPECT_EQ(f1.tail_bound, 0.0);
    EXPECT_NEAR(f1.value, 2.0 / kPi - 2.0 / 3.0, 4 * kEps);
    EXPECT_NEAR(f1.value, -0.030046894299085342, 1e-15);
    const auto fh = cusa::gap_trig(BoundParam::trig(0.5), kPi / 2.0);
    EXPECT_NEAR(fh.value, 2.0 / kPi - 2.0 * std::sqrt(2.0) / 3.0 + 1.0 / 3.0, 4 * kEps);
    EXPECT_GT(fh.value, 0.0);
}

TEST(GapTrig, SeriesValuesAgainstOracle)
{
    // high-precision reference values
    const auto s = cusa::gap_trig(BoundParam::trig(0.6), 0.3);
    EXPECT_EQ(s.method, GapMethod::Series);
    EXPECT_NEAR(s.value, 2.689925250097758e-05, 1e-20);
    EXPECT_LE(std::fabs(s.value - 2.689925250097758e-05), s.tail_bound + 1e-20);
    const auto d = cusa::gap_trig(BoundParam::trig(0.6), 0.7);
    EXPECT_EQ(d.method, GapMethod::Direct);
    EXPECT_NEAR(d.value, 7.841851826594540e-04, 1e-15);
    // direct subtraction would give 0 here; the series keeps the leading term
    EXPECT_NEAR(cusa::gap_trig(BoundParam::trig(0.7), 1e-30).value / ((3.0 - 5.0 * 0.49) / 360.0 * 1e-120), 1.0,
                1e-14);
}

TEST(GapHyp, SignsAndValues)
{
    const BoundParam p1 = BoundParam::hyperbolic(std::sqrt(15.0) / 5.0);
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
        EXPECT_GT(cusa::gap_hyp(p1, x).value, 0.0) << x;
        EXPECT_LT(cusa::gap_hyp(BoundParam::hyperbolic(1.0), x).value, 0.0) << x;
    }
    EXPECT_NEAR(cusa::gap_hyp(BoundParam::hyperbolic(0.5), 0.3).value, 3.949872158144330e-05, 1e-20);
    EXPECT_NEAR(cusa::gap_hyp(BoundParam::hyperbolic(1.2), 2.0).value, -0.24141867731850614, 1e-14);
}

TEST(GapFunctions, Evenness)
{
    for (double x : {0.2, 0.9}) {
        EXPECT_EQ(cusa::gap_trig(BoundParam::trig(0.7), -x).value, cusa::gap_trig(BoundParam::trig(0.7), x).value);
        EXPECT_EQ(cusa::gap_hyp(BoundParam::hyperbolic(0.7), -x).value,
                  cusa::gap_hyp(BoundParam::hyperbolic(0.7), x).value);
    }
}

TEST(GapFunctions, SeriesAndDirectAgreeAcrossSwitch)
{
    for (double p : {0.0, 0.3, 0.6, 0.7745966692414834, 0.9, 1.0}) {
        for (double x : {0.45, 0.49, 0.5}) {
            const auto s = cusa::gap_trig(BoundParam::trig(p), x);
            ASSERT_EQ(s.method, GapMethod::Series);
            const double direct = cusa::sinc(x) - cusa::u_bound(BoundParam::trig(p), x);
            EXPECT_LE(std::fabs(s.value - direct), s.tail_bound + 16 * kEps) << p << ' ' << x;

            const auto h = cusa::gap_hyp(BoundParam::hyperbolic(p), x);
            const double hdirect = cusa::sinhc(x) - cusa::v_bound(BoundParam::hyperbolic(p), x);
            EXPECT_LE(std::fabs(h.value - hdirect), h.tail_bound + 16 * kEps) << p << ' ' << x;
        }
    }
}

TEST(GapFunctions, SeriesTailIsTinyAtSwitch)
{
    const auto s = cusa::gap_trig(BoundParam::trig(0.6), 0.5);
    EXPECT_LE(s.tail_bound, 1e-18);
}

TEST(CoeffA, KnownValues)
{
    for (double c : {0.0, 0.2, 0.6}) EXPECT_EQ(cusa::coeff_a(1, c), 0.0);
    EXPECT_DOUBLE_EQ(cusa::coeff_a(2, 0.4), 3.0 - 5.0 * 0.4);
    EXPECT_NEAR(cusa::coeff_a(4, 0.6) / cusa::coeff_a(3, 0.6), 11.0 / 5.0, 8 * kEps);
    EXPECT_THROW((void)cusa::coeff_a(0, 0.5), std::invalid_argument);
    EXPECT_THROW((void)cusa::coeff_a(2, -0.1), std::domain_error);
}

TEST(CoeffA, InvariantsOnGrid)
{
    for (int i = 1; i <= 60; ++i) {
        const double c = 0.6 * i / 60.0;
        for (int n = 1; n <= 100; ++n) EXPECT_GE(cusa::coeff_a(n, c), 0.0) << n << ' ' << c;
        for (int n = 3; n < 100; ++n) {
            EXPECT_GT(cusa::coeff_ratio_excess(n, c), 0.0) << n << ' ' << c;
            EXPECT_LE(cusa::coeff_ratio(n, c), 11.0 / 5.0 * (1 + 8 * kEps)) << n << ' ' << c;
        }
    }
}

TEST(FourthOrderCoeff, Values)
{
    EXPECT_LT(std::fabs(cusa::fourth_order_coeff(BoundParam::trig(std::sqrt(15.0) / 5.0))), 1e-16);
    EXPECT_DOUBLE_EQ(cusa::fourth_order_coeff(BoundParam::trig(0.0)), 1.0 / 120.0);
    EXPECT_DOUBLE_EQ(cusa::fourth_order_coeff(BoundParam::trig(1.0)), -1.0 / 180.0);
    EXPECT_DOUBLE_EQ(cusa::fourth_order_coeff(BoundParam::hyperbolic(1.0)), -1.0 / 180.0);
}

TEST(FourthOrderCoeff, MatchesRichardsonLimit)
{
    // g(h) = gap(h)/h^4 = c + d h^2 + e h^4 + ...; two Richardson steps in h^2
    for (double p : {0.2, 0.5, 0.77, 1.0}) {
        auto g_trig = [p](double h) {
            return (cusa::sinc(h) - cusa::u_bound(BoundParam::trig(p), h)) / std::pow(h, 4);
        };
        auto g_hyp = [p](double h) {
            return (cusa::sinhc(h) - cusa::v_bound(BoundParam::hyperbolic(p), h)) / std::pow(h, 4);
        };
        auto extrapolate = [](auto&& g) {
            const double a0 = g(0.2), a1 = g(0.1), a2 = g(0.05);
            const double b0 = (4 * a1 - a0) / 3, b1 = (4 * a2 - a1) / 3;
            return (16 * b1 - b0) / 15;
        };
        const double expected = cusa::fourth_order_coeff(BoundParam::trig(p));
        EXPECT_NEAR(extrapolate(g_trig), expected, 1e-8) << p;
        EXPECT_NEAR(extrapolate(g_hyp), expected, 1e-8) << p;
    }
}

TEST(ParameterMonotonicity, SampledTriples)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> up(0.0, 1.0), ux(1e-3, kPi / 2.0), vp(0.0, 3.0), vx(1e-3, 10.0);
    for (int i = 0; i < 2000; ++i) {
        double p = up(rng), q = up(rng);
        if (p == q) continue;
        if (p > q) std::swap(p, q);
        const double x = ux(rng);
        const auto d = cusa::u_bound_increment(p, q, x);
        EXPECT_GT(d.value, d.error) << p << ' ' << q << ' ' << x;

        double r = vp(rng), s = vp(rng);
        if (r == s) continue;
        if (r > s) std::swap(r, s);
        const double y = vx(rng);
        const auto e = cusa::v_bound_increment(r, s, y);
        EXPECT_GT(e.value, e.error) << r << ' ' << s << ' ' << y;
    }
}

TEST(ParameterMonotonicity, DerivativeInP)
{
    for (double p : {0.05, 0.3, 0.7, 1.0})
        for (double x : {0.01, 0.5, 1.5}) {
            EXPECT_GT(cusa::u_bound_dp(p, x), 0.0);
            EXPECT_GT(cusa::v_bound_dp(p, x), 0.0);
            const double h = 1e-6;
            const double fd = (cusa::u_bound(BoundParam::trig(std::min(1.0, p + h)), x) -
                               cusa::u_bound(BoundParam::trig(p - h), x)) /
                              (std::min(1.0, p + h) - (p - h));
            EXPECT_NEAR(cusa::u_bound_dp(p, x), fd, 1e-6 + 1e-4 * std::fabs(fd));
        }
}

TEST(GeometricBounds, Forms)
{
    EXPECT_NEAR(cusa::geometric_bound_trig(1.0, 0.8), std::cbrt(std::cos(0.8)), 4 * kEps);
    const double r = 1.0 / std::sqrt(3.0);
    EXPECT_NEAR(cusa::geometric_bound_trig(r, 1.2), std::cos(1.2 * r), 4 * kEps);
    EXPECT_NEAR(cusa::geometric_bound_hyp(r, 3.0) / std::cosh(3.0 * r), 1.0, 8 * kEps);
    EXPECT_NEAR(cusa::geometric_bound_trig(0.5, 1e-9), 1.0, 1e-15);
    EXPECT_NEAR(cusa::geometric_bound_hyp(0.5, 1e-9), 1.0, 1e-15);
    EXPECT_GT(cusa::v_bound(BoundParam::hyperbolic(0.76), 1.0), cusa::geometric_bound_hyp(0.76, 1.0));
    EXPECT_THROW((void)cusa::geometric_bound_trig(1.0, kPi / 2.0 + 0.01), std::domain_error);
    EXPECT_THROW((void)cusa::geometric_bound_hyp(0.1, 1e6), std::overflow_error);
}

TEST(Leibniz, TermRatioBound)
{
    EXPECT_LT(cusa::kLeibnizRatioBound, 1.0);
    EXPECT_NEAR(cusa::kLeibnizRatioBound, 0.30157124558884146, 1e-15);
    const double p1 = std::sqrt(15.0) / 5.0;
    for (int n = 3; n <= 30; ++n) {
        for (int i = 1; i < 200; ++i) {
            const double x = kPi / 2.0 * i / 200.0;
            const double ratio = cusa::leibniz_term_ratio(p1, n, x);
            EXPECT_LT(ratio, cusa::kLeibnizRatioBound) << n << ' ' << x;
        }
        // closed quotient agrees with the explicit terms
        const double x = 1.1;
        EXPECT_NEAR(cusa::leibniz_term(p1, n + 1, x) / cusa::leibniz_term(p1, n, x),
                    cusa::leibniz_term_ratio(p1, n, x), 1e-12);
    }
}

TEST(ScaledForms, AgreeWithDirectWhereRepresentable)
{
    const BoundParam q = BoundParam::hyperbolic(0.999);
    for (double x : {1.0, 20.0, 50.0}) {
        EXPECT_NEAR(cusa::scaled_sinhc(x, 1.0) / (std::exp(-x) * cusa::sinhc(x)), 1.0, 1e-14);
        EXPECT_NEAR(cusa::scaled_v_bound(q, x, 1.0) / (std::exp(-x) * cusa::v_bound(q, x)), 1.0, 1e-14);
    }
    EXPECT_EQ(cusa::hyp_gap_exponential_limit(BoundParam::hyperbolic(0.9)), std::numeric_limits<double>::infinity());
    EXPECT_DOUBLE_EQ(cusa::hyp_gap_exponential_limit(BoundParam::hyperbolic(1.0)), -1.0 / 6.0);
}
