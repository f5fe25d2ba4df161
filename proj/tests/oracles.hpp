#pragma once

// Slow, independent reference implementations used only by the tests.  These
// deliberately avoid every shortcut the library takes (running ratios,
// compensated sums, the Lanczos fit) so a shared bug cannot cancel out.

#include <cmath>

namespace test_oracle {

// Direct long-double summation of the defining series: every term is built
// from scratch with lgammal, no recurrence between terms.
inline long double struve_series(long double k, long double nu, long double c,
                                 long double x, int terms = 300) {
    const long double q = nu / k;
    long double acc = 0.0L;
    for (int r = 0; r < terms; ++r) {
        const long double lg = (r + q + 0.5L) * std::log(k)
                             + std::lgammal(r + q + 1.5L)
                             + std::lgammal(r + 1.5L);
        const long double lt = (2.0L * r + q + 1.0L) * std::log(x / 2.0L) - lg;
        long double coef;
        if (c == 0.0L) {
            coef = (r == 0) ? 1.0L : 0.0L;
        } else {
            const long double sign = (c > 0.0L && r % 2 == 1) ? -1.0L : 1.0L;
            coef = sign * std::pow(std::fabs(c), static_cast<long double>(r));
        }
        acc += coef * std::exp(lt);
    }
    return acc;
}

// Stirling series with eight Bernoulli terms; good to ~1e-18 relative for
// x >= 20.
inline long double stirling_lgamma(long double x) {
    const long double two_pi = 6.283185307179586476925286766559L;
    const long double b[] = {
        1.0L / 12.0L,      -1.0L / 360.0L,     1.0L / 1260.0L,    -1.0L / 1680.0L,
        1.0L / 1188.0L,    -691.0L / 360360.0L, 7.0L / 1092.0L,   -3617.0L / 122400.0L,
    };
    long double s = (x - 0.5L) * std::log(x) - x + 0.5L * std::log(two_pi);
    long double p = 1.0L / x;
    const long double x2 = x * x;
    for (long double coef : b) {
        s += coef * p;
        p /= x2;
    }
    return s;
}

} // namespace test_oracle
