#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "eval_result.hpp"
#include "gamma.hpp"

namespace kstruve {

// Parameter set of the generalized Wright hypergeometric function
//   pPsi_q(z) = sum_{n>=0} prod_i Gamma(a_i + alpha_i n)
//                        / prod_j Gamma(b_j + beta_j n) * z^n / n!.
struct FoxWrightSpec {
    std::vector<std::pair<double, double>> upper; // (a_i, alpha_i)
    std::vector<std::pair<double, double>> lower; // (b_j, beta_j)
};

// sum(beta_j) - sum(alpha_i); the series defines an entire function of z
// whenever this exceeds -1.
inline double delta(const FoxWrightSpec& spec) {
    double d = 0.0;
    for (const auto& bb : spec.lower) d += bb.second;
    for (const auto& aa : spec.upper) d -= aa.second;
    return d;
}

namespace detail {

// Sort each parameter list by (weight, offset) so that any permutation of
// the same pairs multiplies gamma factors in the same order and therefore
// produces bit-identical sums.
inline void canonicalize(FoxWrightSpec& spec) {
    auto lt = [](const std::pair<double, double>& l, const std::pair<double, double>& r) {
        if (l.second != r.second) return l.second < r.second;
        return l.first < r.first;
    };
    std::sort(spec.upper.begin(), spec.upper.end(), lt);
    std::sort(spec.lower.begin(), spec.lower.end(), lt);
}

} // namespace detail

// Sums the Wright series. The stopping rule targets a truncation error of
// tol * max(1, |value|); the reported err_estimate is that tail bound plus a
// summation-rounding allowance of a few ulps of sum|term|, so it stays honest
// even when a tighter rerun lands exactly one term further.
// Terms are assembled from log-gamma differences with per-term sign tracking;
// a gamma pole in a lower parameter annihilates the term (the reciprocal
// gamma vanishes there), while a pole in an upper parameter is an error.
// Truncation: the term magnitude must fall below tol * max(1, |partial|) for
// three consecutive n, and the geometric tail bound |term_n| r/(1-r) with
// r = |term_n / term_{n-1}| < 1 must fall below the same threshold. Terms
// annihilated by a lower-parameter pole are structural zeros: they carry no
// information about decay, so they do not advance the stopping rule.
inline EvalResult eval_fox_wright(FoxWrightSpec spec, double z, double tol) {
    if (!(tol > 0.0)) throw domain_error("eval_fox_wright: tol must be positive");
    if (!(delta(spec) > -1.0))
        throw convergence_condition_error(
            "eval_fox_wright: requires sum(beta) - sum(alpha) > -1, got " + std::to_string(delta(spec)));
    detail::canonicalize(spec);

    struct Term {
        double value;
        double abs;
        bool pole_zero;
    };
    auto term_at = [&spec, z](std::int64_t n) -> Term {
        const double nn = static_cast<double>(n);
        double log_abs = 0.0;
        double sign = 1.0;
        for (const auto& [b, beta] : spec.lower) {
            const double arg = b + beta * nn;
            if (detail::near_pole(arg)) return {0.0, 0.0, true};
            const auto g = detail::signed_log_gamma(arg);
            log_abs -= g.log_abs;
            sign *= g.sign;
        }
        for (const auto& [a, alpha] : spec.upper) {
            const double arg = a + alpha * nn;
            if (detail::near_pole(arg))
                throw pole_error("eval_fox_wright: upper gamma argument at a pole (n=" + std::to_string(n) + ")");
            const auto g = detail::signed_log_gamma(arg);
            log_abs += g.log_abs;
            sign *= g.sign;
        }
        if (n > 0) {
            log_abs += nn * std::log(std::fabs(z)) - detail::signed_log_gamma(nn + 1.0).log_abs;
            if (z < 0.0 && n % 2 != 0) sign = -sign;
        }
        if (log_abs > detail::max_exp_arg)
            throw overflow_error("eval_fox_wright: term exceeds double range (n=" + std::to_string(n) + ")");
        const double v = sign * std::exp(log_abs);
        return {v, std::fabs(v), false};
    };

    const Term t0 = term_at(0);
    if (z == 0.0) return {t0.value, 0.0, 1};

    detail::CompensatedSum acc;
    acc.add(t0.value);
    double abs_acc = t0.abs;
    double prev_abs = t0.pole_zero ? 0.0 : t0.abs;
    int below = 0;
    const std::int64_t cap = 20000;

    for (std::int64_t n = 1; n <= cap; ++n) {
        const Term t = term_at(n);
        if (t.pole_zero) continue;
        acc.add(t.value);
        abs_acc += t.abs;
        const double threshold = tol * std::max(1.0, std::fabs(acc.value()));
        below = (t.abs <= threshold) ? below + 1 : 0;

        double tail = std::numeric_limits<double>::infinity();
        if (t.abs == 0.0) {
            tail = 0.0;
        } else if (prev_abs > 0.0) {
            const double r = t.abs / prev_abs;
            if (r < 1.0) tail = t.abs * r / (1.0 - r);
        }
        if (below >= 3 && tail <= threshold) {
            const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_acc;
            return {acc.value(), tail + rounding, n + 1};
        }
        prev_abs = t.abs;
    }
    throw nonconvergence_error("eval_fox_wright: term cap exceeded");
}

} // namespace kstruve
