#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cusa {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept
    {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/**
 * Partial sum of an alternating series sum_{n<terms} term(n), accelerated
 * by repeated averaging of the last depth+1 partial sums (the Euler
 * transform applied to the tail).  depth = 0 returns the plain partial sum.
 */
template <class Term>
double iterated_average_sum(Term&& term, std::size_t terms, std::size_t depth)
{
    if (terms == 0) throw std::invalid_argument("iterated_average_sum: need at least one term");
    const std::size_t keep = std::min(terms, depth + 1);
    std::vector<double> partial;
    partial.reserve(keep);
    CompensatedSum sum;
    for (std::size_t n = 0; n < terms; ++n) {
        sum.add(term(n));
        if (n + keep >= terms) partial.push_back(sum.value());
    }
    for (std::size_t level = partial.size(); level > 1; --level) {
        for (std::size_t i = 0; i + 1 < level; ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    }
    return partial.front();
}

}  // namespace cusa
