#pragma once

#include <cmath>
#include <cstdint>

namespace kstruve {

// Uniform result wrapper for series and quadrature evaluations.
// err_estimate bounds the absolute truncation/quadrature error of value;
// work counts summed terms or integrand evaluations.
struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::int64_t work = 0;
};

namespace detail {

// Neumaier's variant of compensated summation; unlike plain Kahan it also
// stays exact-to-rounding when an addend dominates the running sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace detail
} // namespace kstruve
