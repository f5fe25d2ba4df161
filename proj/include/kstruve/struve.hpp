#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"
#include "eval_result.hpp"
#include "gamma.hpp"

namespace kstruve {

// Parameters of the k-Struve series
//   S^k_{nu,c}(x) = sum_{r>=0} (-c)^r / (Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2))
//                   * (x/2)^(2r + nu/k + 1).
struct KStruveParams {
    double k;  // deformation parameter, k > 0
    double nu; // order; must satisfy nu > -(3/2)k
    double c;  // sign/scale parameter of the series
};

// Selector for the elementary closed forms the series collapses to at the
// special orders nu = +-k/2, together with the scale gamma inside the trig
// argument gamma*x/sqrt(k).
struct TrigKind {
    enum Kind { ONE_MINUS_COS, COSH_MINUS_ONE, SIN, SINH };
    Kind kind;
    double gamma; // must be nonzero for the closed form to be invertible for S
};

// Series parameters whose sum the corresponding closed form reproduces.
inline KStruveParams matching_struve_params(TrigKind kind, double k) {
    const double g2 = kind.gamma * kind.gamma;
    switch (kind.kind) {
        case TrigKind::ONE_MINUS_COS: return {k, k / 2.0, g2};
        case TrigKind::COSH_MINUS_ONE: return {k, k / 2.0, -g2};
        case TrigKind::SIN: return {k, -k / 2.0, g2};
        case TrigKind::SINH: return {k, -k / 2.0, -g2};
    }
    throw domain_error("matching_struve_params: unknown kind");
}

namespace detail {

// log|term_r| assembled directly from log-gammas, using
//   Gamma_k(rk + nu + 3k/2) = k^(r + nu/k + 1/2) Gamma(r + nu/k + 3/2).
// The series evaluator reaches term r through a running ratio instead; the
// test suite cross-checks the two paths against each other.
inline double struve_term_log(KStruveParams p, double x, std::int64_t r) {
    const double q = p.nu / p.k;
    const double rr = static_cast<double>(r);
    return rr * std::log(std::fabs(p.c)) + (2.0 * rr + q + 1.0) * std::log(x / 2.0)
         - ((rr + q + 0.5) * std::log(p.k) + signed_log_gamma(rr + q + 1.5).log_abs)
         - signed_log_gamma(rr + 1.5).log_abs;
}

// term_{r+1} / term_r of the same series.
inline double struve_term_ratio(KStruveParams p, double x, std::int64_t r) {
    const double q = p.nu / p.k;
    const double h = x / 2.0;
    const double rr = static_cast<double>(r);
    return -p.c * h * h / (p.k * (rr + q + 1.5) * (rr + 1.5));
}

} // namespace detail

// Sums the k-Struve series.  The stopping rule targets a truncation error of
// tol * max(1, |value|); the reported err_estimate is that tail bound plus a
// rounding allowance of a few ulps of sum|term|, so the estimate stays honest
// even when a tighter rerun adds exactly the bounding term.
// Terms after the first follow from the running ratio
//   term_{r+1}/term_r = -c (x/2)^2 / (k (r + nu/k + 3/2)(r + 3/2)),
// so only the leading term touches log-gamma.  Truncation: for c > 0 the
// series alternates and the remainder is bounded by the next term once the
// ratio magnitude drops below 1; for c < 0 all terms are positive and the
// tail is bounded geometrically, requiring ratio < 1/2 at the stop index.
inline EvalResult eval_k_struve(KStruveParams p, double x, double tol) {
    if (!(p.k > 0.0)) throw domain_error("eval_k_struve: k must be positive");
    if (!(p.nu > -1.5 * p.k)) throw domain_error("eval_k_struve: requires nu > -(3/2)k");
    if (!(tol > 0.0 && tol < 1.0)) throw domain_error("eval_k_struve: tol must lie in (0,1)");

    const double q = p.nu / p.k;
    const double lead = q + 1.0; // power of x/2 on the r = 0 term

    if (x == 0.0) {
        if (lead > 0.0) return {0.0, 0.0, 1};
        if (lead == 0.0) {
            const double log_t0 = -((q + 0.5) * std::log(p.k)
                                    + detail::signed_log_gamma(q + 1.5).log_abs)
                                  - detail::signed_log_gamma(1.5).log_abs;
            return {std::exp(log_t0), 0.0, 1};
        }
        throw domain_error("eval_k_struve: x=0 with negative leading power nu/k+1");
    }

    double sign0 = 1.0;
    if (x < 0.0) {
        // (x/2)^(2r + nu/k + 1) needs an integer exponent to stay real
        const double r = std::round(lead);
        if (!(r >= 0.0 && std::fabs(lead - r) <= 1e-12))
            throw domain_error("eval_k_struve: x < 0 requires nu/k + 1 to be a nonnegative integer");
        if (std::llround(lead) % 2 != 0) sign0 = -1.0;
    }

    const double h = std::fabs(x) / 2.0;
    const double log_t0 = lead * std::log(h)
                        - ((q + 0.5) * std::log(p.k) + detail::signed_log_gamma(q + 1.5).log_abs)
                        - detail::signed_log_gamma(1.5).log_abs;
    if (log_t0 > detail::max_exp_arg)
        throw overflow_error("eval_k_struve: leading term exceeds double range");

    double term = sign0 * std::exp(log_t0);
    detail::CompensatedSum acc;
    acc.add(term);
    double abs_acc = std::fabs(term);

    const double num = -p.c * h * h / p.k; // ratio numerator, constant in r
    const std::int64_t cap = 10000;
    std::int64_t r = 0;
    double err = 0.0;

    if (p.c != 0.0) {
        for (;;) {
            const double ratio = num / ((static_cast<double>(r) + q + 1.5) * (static_cast<double>(r) + 1.5));
            const double next = term * ratio;
            if (!std::isfinite(next))
                throw overflow_error("eval_k_struve: intermediate term exceeds double range");
            const double partial = acc.value();
            if (p.c > 0.0) {
                if (std::fabs(ratio) < 1.0 && std::fabs(next) <= tol * std::max(1.0, std::fabs(partial))) {
                    err = std::fabs(next);
                    break;
                }
            } else {
                if (ratio < 0.5 && std::fabs(next) <= tol * std::fabs(partial) * (1.0 - ratio)) {
                    err = std::fabs(next) / (1.0 - ratio);
                    break;
                }
            }
            if (++r >= cap) throw nonconvergence_error("eval_k_struve: term cap exceeded");
            term = next;
            acc.add(term);
            abs_acc += std::fabs(term);
        }
        err += 4.0 * std::numeric_limits<double>::epsilon() * abs_acc;
    }
    return {acc.value(), err, r + 1};
}

// The elementary expression the series equals at nu = +-k/2:
//   1 - cos(gx/sqrt(k)), cosh(gx/sqrt(k)) - 1, sin(gx/sqrt(k)), sinh(gx/sqrt(k)).
// The first two are computed through half-angle squares to stay accurate for
// small arguments.
inline double trig_closed_form(TrigKind kind, double k, double x) {
    if (!(k > 0.0)) throw domain_error("trig_closed_form: k must be positive");
    const double u = kind.gamma * x / std::sqrt(k);
    switch (kind.kind) {
        case TrigKind::ONE_MINUS_COS: {
            const double s = std::sin(0.5 * u);
            return 2.0 * s * s;
        }
        case TrigKind::COSH_MINUS_ONE: {
            const double s = std::sinh(0.5 * u);
            return 2.0 * s * s;
        }
        case TrigKind::SIN: return std::sin(u);
        case TrigKind::SINH: return std::sinh(u);
    }
    throw domain_error("trig_closed_form: unknown kind");
}

// The S-value implied by the closed forms:
//   SIN / SINH:                 S = trig / (g sqrt(pi x / (2k)))
//   ONE_MINUS_COS / COSH_MINUS_ONE: S = trig / (g^2 sqrt(pi x / 2))
// The even-order pair divides by g^2 with no 1/sqrt(k): expanding the left
// side against the series term by term forces exactly that factor (each term
// carries g^(2r+2)/k^(r+1), while the series supplies g^(2r)/k^(r+1) and a
// k-free sqrt(pi x/2) scale).
inline double struve_via_trig(TrigKind kind, double k, double x) {
    if (!(k > 0.0)) throw domain_error("struve_via_trig: k must be positive");
    if (kind.gamma == 0.0) throw domain_error("struve_via_trig: gamma must be nonzero");
    if (!(x > 0.0)) throw domain_error("struve_via_trig: x must be positive");
    const double g = kind.gamma;
    const double t = trig_closed_form(kind, k, x);
    switch (kind.kind) {
        case TrigKind::SIN:
        case TrigKind::SINH:
            return t / (g * std::sqrt(detail::pi * x / (2.0 * k)));
        case TrigKind::ONE_MINUS_COS:
        case TrigKind::COSH_MINUS_ONE:
            return t / (g * g * std::sqrt(detail::pi * x / 2.0));
    }
    throw domain_error("struve_via_trig: unknown kind");
}

} // namespace kstruve
