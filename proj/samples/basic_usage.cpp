// Small tour of the library: the sharp constants, one bound, one enclosure, one mean.
#include <cstdio>
#include <numbers>

#include "cusa/cusa.hpp"

int main()
{
    const cusa::SharpConstant p0 = cusa::sharp_p0();
    std::printf("p0 = %.15f (certified radius %.1e)\n", p0.value, p0.certified_radius);
    std::printf("p1 = %.15f\n", cusa::p1().value);

    const double x = 1.0;
    const double lower = cusa::u_bound(cusa::BoundParam::trig(0.75), x);
    const double upper = cusa::u_bound(cusa::BoundParam::trig(1.0), x);
    std::printf("%.12f < sin(1)/1 = %.12f < %.12f\n", lower, cusa::sinc(x), upper);

    const cusa::Enclosure si = cusa::si_enclosure(std::numbers::pi / 2.0, cusa::BoundParam::trig(2.0 / 3.0));
    std::printf("Si(pi/2) in [%.6f, %.6f], quadrature gives %.15f\n", si.lo, si.hi,
                cusa::si_reference(std::numbers::pi / 2.0).value);

    const cusa::MeanPoint m(1.0, 4.0);
    const cusa::Enclosure l = cusa::log_mean_sandwich(m);
    std::printf("L(1, 4) = %.12f in [%.12f, %.12f]\n", cusa::log_mean(m), l.lo, l.hi);

    const auto report = cusa::verify(cusa::m1_lower_case(0.78), 2000);
    std::printf("U_0.78 < sinc on (0, pi/2): %s, first violation near x = %.6f\n", cusa::to_string(report.verdict),
                report.violations.empty() ? 0.0 : report.violations.front().x);
    return 0;
}
