#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace kstruve {

// Argument pair of the k-deformed gamma function Gamma_k, defined by
//   Gamma_k(x) = k^(x/k - 1) Gamma(x/k),
// which satisfies Gamma_k(x + k) = x Gamma_k(x) and reduces to Gamma at k = 1.
struct KGammaArg {
    double x; // argument
    double k; // deformation parameter, k > 0
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double log_sqrt_two_pi = 0.91893853320467274178032973640562;

// exp() overflows a double just above this.
inline constexpr double max_exp_arg = 709.0;

// Lanczos approximation of log Gamma, g = 7, 9 terms.  The reconstructed
// Gamma carries a relative error of a few 1e-16 .. 1e-15 on the positive
// axis, which is the accuracy floor everything downstream inherits.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log Gamma(x) for x >= 0.5, where no reflection is needed.
inline double log_gamma_right(double x) {
    const double z = x - 1.0;
    double series = lanczos_coef[0];
    for (int i = 1; i < 9; ++i) series += lanczos_coef[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    return log_sqrt_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi*x) with the argument reduced before scaling by pi, so near-integer
// and large arguments keep full precision (plain sin(pi*x) already loses
// digits to the rounding of pi*x).
inline double sin_pi(double x) {
    double r = std::remainder(x, 2.0); // in [-1, 1], same sine
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(pi * r);
}

// True when x sits within tol of a pole of Gamma (zero or a negative integer).
inline bool near_pole(double x, double tol = 1e-12) {
    const double r = std::round(x);
    return r <= 0.0 && std::fabs(x - r) <= tol;
}

// log|Gamma(x)| together with the sign of Gamma(x); defined for every
// non-pole real via the reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi x).
struct SignedLogGamma {
    double log_abs;
    double sign;
};

inline SignedLogGamma signed_log_gamma(double x) {
    if (x >= 0.5) return {log_gamma_right(x), 1.0};
    const double s = sin_pi(x);
    if (s == 0.0) throw pole_error("gamma pole at x=" + std::to_string(x));
    return {std::log(pi / std::fabs(s)) - log_gamma_right(1.0 - x),
            s > 0.0 ? 1.0 : -1.0};
}

} // namespace detail

// Gamma_k(x).  Supports negative non-pole x/k through reflection.
inline double k_gamma(KGammaArg arg) {
    if (!(arg.k > 0.0)) throw domain_error("k_gamma: k must be positive");
    if (!std::isfinite(arg.x)) throw domain_error("k_gamma: x must be finite");
    const double q = arg.x / arg.k;
    if (detail::near_pole(q))
        throw pole_error("k_gamma: x/k=" + std::to_string(q) + " is at a gamma pole");
    const auto g = detail::signed_log_gamma(q);
    const double log_val = (q - 1.0) * std::log(arg.k) + g.log_abs;
    if (log_val > detail::max_exp_arg)
        throw overflow_error("k_gamma: magnitude exceeds double range");
    return g.sign * std::exp(log_val);
}

inline double k_gamma(double x, double k) { return k_gamma(KGammaArg{x, k}); }

// log Gamma_k(x) = (x/k - 1) log k + log Gamma(x/k); restricted to x/k > 0
// where Gamma_k is positive.
inline double log_k_gamma(KGammaArg arg) {
    if (!(arg.k > 0.0)) throw domain_error("log_k_gamma: k must be positive");
    const double q = arg.x / arg.k;
    if (!(q > 0.0)) throw domain_error("log_k_gamma: x/k must be positive");
    return (q - 1.0) * std::log(arg.k) + detail::signed_log_gamma(q).log_abs;
}

inline double log_k_gamma(double x, double k) { return log_k_gamma(KGammaArg{x, k}); }

} // namespace kstruve
