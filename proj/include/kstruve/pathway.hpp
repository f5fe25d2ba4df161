#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "errors.hpp"
#include "eval_result.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"

namespace kstruve {

// Parameter triple of the pathway integral operator
//   P[f](x) = x^eta * Int_0^U (1 - t/U)^mu f(t) dt,
// with U = x / (a(1 - alpha)) and mu = eta / (1 - alpha).
struct PathwayParams {
    double eta;   // order parameter, > 0
    double alpha; // pathway parameter, < 1
    double a;     // scale, > 0
};

inline void validate(const PathwayParams& p) {
    if (!(p.alpha < 1.0)) throw domain_error("pathway: requires alpha < 1");
    if (!(p.a > 0.0)) throw domain_error("pathway: requires a > 0");
    if (!(p.eta > 0.0)) throw domain_error("pathway: requires eta > 0");
    if (!(p.eta / (1.0 - p.alpha) > -1.0))
        throw domain_error("pathway: weight exponent must exceed -1");
}

// Type-erased integrand for callers that need runtime dispatch; the operator
// itself is a template and takes any callable double -> double.
using Integrand = std::function<double(double)>;

// Evaluates P[f](x) with err_estimate <= tol * max(1, |value|).
//
// The weight is absorbed exactly by substituting t = U(1 - s^(1/(mu+1))):
//   Int_0^U (1 - t/U)^mu f(t) dt = U/(mu+1) * Int_0^1 f(t(s)) ds,
// and s is then ramped through the cubic smoothstep s = u^2(3 - 2u) so the
// transformed integrand has vanishing one-sided derivatives at both ends,
// which keeps fractional powers of t benign for the Kronrod panels.  t is
// recovered through expm1/log1p on whichever of s and 1-s is small, so
// abscissae keep full precision arbitrarily close to both endpoints.  f is
// only ever evaluated on the open interval (0, U).
template <typename F>
EvalResult pathway_integral(const PathwayParams& params, F&& f, double x, double tol) {
    validate(params);
    if (!(x > 0.0)) throw domain_error("pathway: requires x > 0");
    if (!(tol > 0.0)) throw domain_error("pathway: tol must be positive");

    const double U = x / (params.a * (1.0 - params.alpha));
    const double mp1 = params.eta / (1.0 - params.alpha) + 1.0;

    auto g = [&f, U, mp1](double u) -> double {
        const double ds = 6.0 * u * (1.0 - u);
        if (ds == 0.0) return 0.0; // endpoint; unreachable through Kronrod nodes
        const double log_s = (u < 0.5)
            ? std::log(u * u * (3.0 - 2.0 * u))
            : std::log1p(-(1.0 - u) * (1.0 - u) * (1.0 + 2.0 * u));
        const double t = -U * std::expm1(log_s / mp1);
        double ft;
        try {
            ft = f(t);
        } catch (const integrand_error&) {
            throw;
        } catch (const error& e) {
            throw integrand_error(e.what(), t);
        }
        return ft * ds;
    };

    const double scale = std::pow(x, params.eta) * U / mp1;
    QuadOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol / scale;
    EvalResult inner;
    try {
        inner = integrate_adaptive(g, 0.0, 1.0, opt);
    } catch (const nonconvergence_error& e) {
        throw nonconvergence_error(std::string("pathway_integral: ") + e.what());
    }
    return {scale * inner.value, scale * inner.err_estimate, inner.work};
}

// Closed form of P applied to t^(beta-1):
//   P[t^(beta-1)](x) = x^(eta+beta) / (a(1-alpha))^beta
//                      * Gamma(beta) Gamma(1+mu) / Gamma(1+mu+beta),
// computed in the log-gamma domain.
inline double pathway_power_closed(const PathwayParams& params, double beta, double x) {
    validate(params);
    if (!(beta > 0.0)) throw domain_error("pathway_power_closed: requires beta > 0");
    if (!(x > 0.0)) throw domain_error("pathway_power_closed: requires x > 0");
    const double mu = params.eta / (1.0 - params.alpha);
    const double aa = params.a * (1.0 - params.alpha);
    const double log_val = (params.eta + beta) * std::log(x) - beta * std::log(aa)
                         + detail::signed_log_gamma(beta).log_abs
                         + detail::signed_log_gamma(1.0 + mu).log_abs
                         - detail::signed_log_gamma(1.0 + mu + beta).log_abs;
    if (log_val > detail::max_exp_arg)
        throw overflow_error("pathway_power_closed: magnitude exceeds double range");
    return std::exp(log_val);
}

} // namespace kstruve
