#pragma once

#include <stdexcept>

namespace cusa {

/// Closed interval [lo, hi] asserted to contain some target value.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] static Enclosure of(double lo, double hi)
    {
        if (!(lo <= hi)) throw std::logic_error("Enclosure: lo must not exceed hi");
        return {lo, hi};
    }

    [[nodiscard]] bool contains(double v) const noexcept { return lo <= v && v <= hi; }
    [[nodiscard]] bool contains(const Enclosure& e) const noexcept { return lo <= e.lo && e.hi <= hi; }
    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

}  // namespace cusa
