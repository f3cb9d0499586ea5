#pragma once

#include <cmath>
#include <stdexcept>

namespace cusa {

/// A sign-change bracket: f(lo) > 0 > f(hi) (or the reverse, per the caller's convention).
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
};

/**
 * Bisection for a function with f(lo) > 0 > f(hi).  The observer sees
 * every bracket in order, so callers can audit nesting and halving.
 */
template <class F, class Observer>
Bracket bisect_sign_change(F&& f, Bracket b, double width, Observer&& observe)
{
    if (!(b.lo < b.hi)) throw std::invalid_argument("bisect_sign_change: empty bracket");
    if (!(f(b.lo) > 0.0) || !(f(b.hi) < 0.0))
        throw std::invalid_argument("bisect_sign_change: endpoints do not bracket a sign change");
    observe(b);
    while (b.width() > width) {
        const double m = b.midpoint();
        if (m <= b.lo || m >= b.hi) break;  // bracket exhausted at double resolution
        const double fm = f(m);
        if (fm > 0.0)
            b.lo = m;
        else if (fm < 0.0)
            b.hi = m;
        else
            return {m, m};
        observe(b);
    }
    return b;
}

template <class F>
Bracket bisect_sign_change(F&& f, Bracket b, double width)
{
    return bisect_sign_change(std::forward<F>(f), b, width, [](const Bracket&) {});
}

}  // namespace cusa
