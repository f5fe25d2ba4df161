#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "eval_result.hpp"
#include "fox_wright.hpp"
#include "gamma.hpp"
#include "pathway.hpp"
#include "struve.hpp"

namespace kstruve {

// The ten verification cases: five pathway-integral identities and their
// k = 1 specializations.  TH1/COR1 integrate the full k-Struve series;
// TH2..TH5 families integrate the elementary closed forms at nu = +-k/2.
enum class CaseId { TH1, COR1, TH2, COR2, TH3, COR3, TH4, COR4, TH5, COR5 };

inline constexpr CaseId all_case_ids[10] = {
    CaseId::TH1, CaseId::COR1, CaseId::TH2, CaseId::COR2, CaseId::TH3,
    CaseId::COR3, CaseId::TH4, CaseId::COR4, CaseId::TH5, CaseId::COR5,
};

inline const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::TH1: return "th1";
        case CaseId::COR1: return "cor1";
        case CaseId::TH2: return "th2";
        case CaseId::COR2: return "cor2";
        case CaseId::TH3: return "th3";
        case CaseId::COR3: return "cor3";
        case CaseId::TH4: return "th4";
        case CaseId::COR4: return "cor4";
        case CaseId::TH5: return "th5";
        case CaseId::COR5: return "cor5";
    }
    return "?";
}

inline bool parse_case_name(std::string_view s, CaseId& out) {
    for (CaseId id : all_case_ids) {
        if (s == case_name(id)) {
            out = id;
            return true;
        }
    }
    return false;
}

inline bool is_series_case(CaseId id) { return id == CaseId::TH1 || id == CaseId::COR1; }

inline bool is_corollary(CaseId id) {
    switch (id) {
        case CaseId::COR1:
        case CaseId::COR2:
        case CaseId::COR3:
        case CaseId::COR4:
        case CaseId::COR5: return true;
        default: return false;
    }
}

// One fully instantiated identity: pathway parameters, the power rho, the
// deformation k, and the integrand's own parameters (nu, c for the series
// cases; the trig scale gamma for the others).
struct TheoremCase {
    CaseId case_id;
    PathwayParams params;
    double rho;
    double k;
    double nu = 0.0;
    double c = 0.0;
    double gamma_scale = 0.0;
};

inline TheoremCase make_series_case(CaseId id, PathwayParams pw, double rho,
                                    double k, double nu, double c) {
    if (!is_series_case(id)) throw domain_error("make_series_case: case takes a trig scale, not (nu, c)");
    validate(pw);
    if (!(rho > 0.0)) throw domain_error("make_series_case: requires rho > 0");
    if (!(k > 0.0)) throw domain_error("make_series_case: requires k > 0");
    if (is_corollary(id) && k != 1.0) throw domain_error("make_series_case: corollary fixes k = 1");
    if (!(nu > -1.5 * k)) throw domain_error("make_series_case: requires nu > -(3/2)k");
    return {id, pw, rho, k, nu, c, 0.0};
}

inline TheoremCase make_trig_case(CaseId id, PathwayParams pw, double rho,
                                  double k, double gamma_scale) {
    if (is_series_case(id)) throw domain_error("make_trig_case: case takes (nu, c), not a trig scale");
    validate(pw);
    if (!(rho > 0.0)) throw domain_error("make_trig_case: requires rho > 0");
    if (!(k > 0.0)) throw domain_error("make_trig_case: requires k > 0");
    if (is_corollary(id) && k != 1.0) throw domain_error("make_trig_case: corollary fixes k = 1");
    return {id, pw, rho, k, 0.0, 0.0, gamma_scale};
}

inline TrigKind trig_kind_of(const TheoremCase& tc) {
    switch (tc.case_id) {
        case CaseId::TH2:
        case CaseId::COR2: return {TrigKind::ONE_MINUS_COS, tc.gamma_scale};
        case CaseId::TH3:
        case CaseId::COR3: return {TrigKind::COSH_MINUS_ONE, tc.gamma_scale};
        case CaseId::TH4:
        case CaseId::COR4: return {TrigKind::SIN, tc.gamma_scale};
        case CaseId::TH5:
        case CaseId::COR5: return {TrigKind::SINH, tc.gamma_scale};
        default: throw domain_error("trig_kind_of: series case has no trig kind");
    }
}

// Left side: the pathway operator applied to t^(rho-1) times the integrand
// factor.  The trig families use the elementary closed form directly, so no
// series truncation enters; TH1/COR1 run the series at a tenfold tighter
// tolerance to keep the quadrature budget dominant.
inline EvalResult lhs_quadrature(const TheoremCase& tc, double x, double tol) {
    if (is_series_case(tc.case_id)) {
        const KStruveParams sp{tc.k, tc.nu, tc.c};
        const double series_tol = tol / 10.0;
        return pathway_integral(tc.params,
                                [&sp, &tc, series_tol](double t) {
                                    return std::pow(t, tc.rho - 1.0)
                                         * eval_k_struve(sp, t, series_tol).value;
                                },
                                x, tol);
    }
    const TrigKind kind = trig_kind_of(tc);
    return pathway_integral(tc.params,
                            [kind, &tc](double t) {
                                return std::pow(t, tc.rho - 1.0)
                                     * trig_closed_form(kind, tc.k, t);
                            },
                            x, tol);
}

namespace detail {

// A closed form "prefactor * pPsi_q(z)" with the prefactor carried in the
// log domain (sign split off).
struct ClosedForm {
    double log_pre;
    double pre_sign;
    FoxWrightSpec spec;
    double z;
};

inline EvalResult eval_closed(const ClosedForm& cf, double tol) {
    const EvalResult fw = eval_fox_wright(cf.spec, cf.z, tol);
    if (cf.log_pre > max_exp_arg)
        throw overflow_error("closed form: prefactor exceeds double range");
    const double pre = cf.pre_sign * std::exp(cf.log_pre);
    return {pre * fw.value, std::fabs(pre) * fw.err_estimate, fw.work};
}

// Shared pieces of every display.
struct CaseGeometry {
    double mu;      // eta / (1 - alpha)
    double aa;      // a (1 - alpha)
    double log_x;
    double log_aa;
    double lg_mu1;  // log Gamma(1 + mu)
};

inline CaseGeometry case_geometry(const TheoremCase& tc, double x) {
    CaseGeometry g;
    g.mu = tc.params.eta / (1.0 - tc.params.alpha);
    g.aa = tc.params.a * (1.0 - tc.params.alpha);
    g.log_x = std::log(x);
    g.log_aa = std::log(g.aa);
    g.lg_mu1 = signed_log_gamma(1.0 + g.mu).log_abs;
    return g;
}

// TH1/COR1 display (printed and re-derived forms coincide):
//   x^eta (x/aa)^(rho+q+1) Gamma(1+mu) / (k^(q+1/2) 2^(q+1))
//   * 2Psi3[(rho+q+1,2),(1,1); (rho+q+mu+2,2),(q+3/2,1),(3/2,1); -c x^2/(4k aa^2)]
inline ClosedForm series_case_form(const TheoremCase& tc, double x) {
    const CaseGeometry g = case_geometry(tc, x);
    const double q = tc.nu / tc.k;
    ClosedForm cf;
    cf.log_pre = tc.params.eta * g.log_x + (tc.rho + q + 1.0) * (g.log_x - g.log_aa)
               + g.lg_mu1 - (q + 0.5) * std::log(tc.k) - (q + 1.0) * std::log(2.0);
    cf.pre_sign = 1.0;
    cf.spec.upper = {{tc.rho + q + 1.0, 2.0}, {1.0, 1.0}};
    cf.spec.lower = {{tc.rho + q + g.mu + 2.0, 2.0}, {q + 1.5, 1.0}, {1.5, 1.0}};
    cf.z = -tc.c * x * x / (4.0 * tc.k * g.aa * g.aa);
    return cf;
}

// TH2/TH3 family display.  The Wright part is
//   2Psi3[(rho+2,2),(1,1); (rho+mu+3,2),(2,1),(3/2,1); -+ g^2 x^2/(4k aa^2)]
// and the prefactor is sqrt(pi) * G * x^(eta+rho+2) Gamma(1+mu) / (4 aa^(rho+2)),
// where the re-derived scale is G = g^2/k while the display as printed
// carries G = g/k^2 (the two agree only at g*k = 1; the sweep surfaces this).
inline ClosedForm cos_family_form(const TheoremCase& tc, double x, bool corrected) {
    const CaseGeometry g = case_geometry(tc, x);
    const double gam = tc.gamma_scale;
    ClosedForm cf;
    const double log_scale = corrected
        ? 2.0 * std::log(std::fabs(gam)) - std::log(tc.k)
        : std::log(std::fabs(gam)) - 2.0 * std::log(tc.k);
    cf.log_pre = 0.5 * std::log(pi) + log_scale + (tc.params.eta + tc.rho + 2.0) * g.log_x
               - std::log(4.0) - (tc.rho + 2.0) * g.log_aa + g.lg_mu1;
    cf.pre_sign = (!corrected && gam < 0.0) ? -1.0 : 1.0;
    cf.spec.upper = {{tc.rho + 2.0, 2.0}, {1.0, 1.0}};
    cf.spec.lower = {{tc.rho + g.mu + 3.0, 2.0}, {2.0, 1.0}, {1.5, 1.0}};
    const double sgn = (tc.case_id == CaseId::TH2 || tc.case_id == CaseId::COR2) ? -1.0 : 1.0;
    cf.z = sgn * gam * gam * x * x / (4.0 * tc.k * g.aa * g.aa);
    return cf;
}

// TH4/TH5 family.  Re-derived:
//   g sqrt(pi/k) x^(rho+eta+1) Gamma(1+mu) / (2 aa^(rho+1))
//   * 1Psi2[(rho+1,2); (rho+mu+2,2),(3/2,1); -+ g^2 x^2/(4k aa^2)].
// As printed the offsets sit half a unit lower, (rho+1/2,2) over
// (rho+mu+3/2,2), and the prefactor carries aa^(rho+1/2) in a typographically
// ambiguous position: reading 0 divides by it, reading 1 multiplies.
inline ClosedForm sin_family_form(const TheoremCase& tc, double x, bool corrected, int reading) {
    const CaseGeometry g = case_geometry(tc, x);
    const double gam = tc.gamma_scale;
    ClosedForm cf;
    const double base = std::log(std::fabs(gam)) + 0.5 * (std::log(pi) - std::log(tc.k))
                      + (tc.rho + tc.params.eta + 1.0) * g.log_x - std::log(2.0) + g.lg_mu1;
    cf.pre_sign = (gam < 0.0) ? -1.0 : 1.0;
    const double sgn = (tc.case_id == CaseId::TH4 || tc.case_id == CaseId::COR4) ? -1.0 : 1.0;
    cf.z = sgn * gam * gam * x * x / (4.0 * tc.k * g.aa * g.aa);
    if (corrected) {
        cf.log_pre = base - (tc.rho + 1.0) * g.log_aa;
        cf.spec.upper = {{tc.rho + 1.0, 2.0}};
        cf.spec.lower = {{tc.rho + g.mu + 2.0, 2.0}, {1.5, 1.0}};
    } else {
        cf.log_pre = base + ((reading == 0) ? -1.0 : 1.0) * (tc.rho + 0.5) * g.log_aa;
        cf.spec.upper = {{tc.rho + 0.5, 2.0}};
        cf.spec.lower = {{tc.rho + g.mu + 1.5, 2.0}, {1.5, 1.0}};
    }
    return cf;
}

} // namespace detail

// The re-derived closed form, validated against lhs_quadrature.
inline EvalResult rhs_corrected(const TheoremCase& tc, double x, double tol) {
    if (is_series_case(tc.case_id))
        return detail::eval_closed(detail::series_case_form(tc, x), tol);
    switch (tc.case_id) {
        case CaseId::TH2:
        case CaseId::COR2:
        case CaseId::TH3:
        case CaseId::COR3:
            return detail::eval_closed(detail::cos_family_form(tc, x, true), tol);
        default:
            return detail::eval_closed(detail::sin_family_form(tc, x, true, 0), tol);
    }
}

// Every faithful transcription of the display as printed.  Most cases have
// one; the TH4/TH5 families have two because of the ambiguous prefactor
// bracket.  The first entry is the primary (natural) reading.
inline std::vector<EvalResult> rhs_printed_readings(const TheoremCase& tc, double x, double tol) {
    if (is_series_case(tc.case_id))
        return {detail::eval_closed(detail::series_case_form(tc, x), tol)};
    switch (tc.case_id) {
        case CaseId::TH2:
        case CaseId::COR2:
        case CaseId::TH3:
        case CaseId::COR3:
            return {detail::eval_closed(detail::cos_family_form(tc, x, false), tol)};
        default:
            return {detail::eval_closed(detail::sin_family_form(tc, x, false, 0), tol),
                    detail::eval_closed(detail::sin_family_form(tc, x, false, 1), tol)};
    }
}

// The display as printed, primary reading.
inline EvalResult rhs_as_printed(const TheoremCase& tc, double x, double tol) {
    return rhs_printed_readings(tc, x, tol)[0];
}

// Value both sides collapse to when the Wright argument vanishes (c = 0 for
// the series cases, gamma = 0 for the trig ones): the integrand loses all
// but its leading term, so the operator reduces to a single power closed
// form (identically zero for the trig families).
inline double degenerate_reduction(const TheoremCase& tc, double x) {
    if (is_series_case(tc.case_id)) {
        if (tc.c != 0.0) throw domain_error("degenerate_reduction: series case requires c = 0");
        const double q = tc.nu / tc.k;
        const double log_coef = -((q + 0.5) * std::log(tc.k)
                                  + detail::signed_log_gamma(q + 1.5).log_abs)
                              - detail::signed_log_gamma(1.5).log_abs
                              - (q + 1.0) * std::log(2.0);
        return std::exp(log_coef) * pathway_power_closed(tc.params, tc.rho + q + 1.0, x);
    }
    if (tc.gamma_scale != 0.0) throw domain_error("degenerate_reduction: trig case requires gamma = 0");
    return 0.0;
}

enum class Status { CONFIRMED, PRINTED_MISMATCH, FAIL };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::CONFIRMED: return "CONFIRMED";
        case Status::PRINTED_MISMATCH: return "PRINTED_MISMATCH";
        case Status::FAIL: return "FAIL";
    }
    return "?";
}

// Grid point where the corrected-form error peaked.
struct WorstPoint {
    double eta = 0.0, alpha = 0.0, a = 0.0, rho = 0.0, x = 0.0, k = 0.0;
    double nu = 0.0, c = 0.0;  // series cases
    double gamma = 0.0;        // trig cases
};

struct VerificationReport {
    CaseId case_id;
    std::string grid_name;
    std::int64_t points = 0;
    double max_rel_err_printed = 0.0;
    double max_rel_err_corrected = 0.0;
    WorstPoint worst_point;
    Status status = Status::FAIL;
    std::int64_t eval_failures = 0;
    std::string first_failure;
};

struct GridSpec {
    std::string name;
    std::vector<std::pair<TheoremCase, double>> points; // (case, x)
};

namespace detail {

struct GridAxes {
    std::vector<double> eta, alpha, a, rho, x;
    std::vector<double> k;
    std::vector<double> nu_hat, c; // series: nu = nu_hat * k
    std::vector<double> gamma;     // trig families
};

inline GridSpec make_grid(CaseId id, const GridAxes& ax, std::string name) {
    GridSpec grid{std::move(name), {}};
    const std::vector<double> ks = is_corollary(id) ? std::vector<double>{1.0} : ax.k;
    if (is_series_case(id)) {
        for (double k : ks)
            for (double nh : ax.nu_hat)
                for (double c : ax.c)
                    for (double eta : ax.eta)
                        for (double al : ax.alpha)
                            for (double a : ax.a)
                                for (double rho : ax.rho)
                                    for (double x : ax.x)
                                        grid.points.emplace_back(
                                            make_series_case(id, {eta, al, a}, rho, k, nh * k, c), x);
    } else {
        for (double k : ks)
            for (double g : ax.gamma)
                for (double eta : ax.eta)
                    for (double al : ax.alpha)
                        for (double a : ax.a)
                            for (double rho : ax.rho)
                                for (double x : ax.x)
                                    grid.points.emplace_back(
                                        make_trig_case(id, {eta, al, a}, rho, k, g), x);
    }
    return grid;
}

} // namespace detail

inline GridSpec default_grid(CaseId id) {
    detail::GridAxes ax;
    ax.eta = {0.5, 1.0, 2.0};
    ax.alpha = {-0.5, 0.0, 0.5};
    ax.a = {0.5, 1.0};
    ax.rho = {0.6, 1.0, 2.0};
    ax.x = {0.5, 1.0, 2.0};
    ax.k = {0.5, 1.0, 2.0};
    ax.nu_hat = {-0.4, 0.5, 1.0};
    ax.c = {-1.0, 0.5, 1.0};
    ax.gamma = {0.5, 1.0};
    return detail::make_grid(id, ax, "default");
}

inline GridSpec dense_grid(CaseId id) {
    detail::GridAxes ax;
    ax.eta = {0.5, 1.0, 2.0};
    ax.alpha = {-0.9, -0.5, 0.0, 0.5, 0.75};
    ax.a = {0.5, 1.0};
    ax.rho = {0.6, 1.0, 2.0, 3.0};
    ax.x = {0.25, 0.5, 1.0, 2.0, 4.0};
    ax.k = {0.5, 1.0, 2.0};
    ax.nu_hat = {-0.4, 0.5, 1.0};
    ax.c = {-1.0, 0.5, 1.0};
    ax.gamma = {0.5, 1.0};
    return detail::make_grid(id, ax, "dense");
}

// Sweeps the grid, comparing both closed forms against the quadrature left
// side with relative errors measured against max(1, |lhs|).  Component
// tolerances are fixed (quadrature 1e-8, series 1e-9 inside it, closed forms
// 1e-8); tol_accept only classifies.  Cases with an ambiguous printed
// display score max_rel_err_printed as the better (smaller) of the two
// readings' grid maxima.  worst_point is the first point attaining the
// corrected-form maximum.  Per-point evaluation failures are counted rather
// than aborting the sweep, and any failure forces status FAIL.
inline VerificationReport verify(CaseId id, const GridSpec& grid, double tol_accept) {
    if (grid.points.empty()) throw domain_error("verify: empty grid");
    constexpr double quad_tol = 1e-8;
    constexpr double rhs_tol = 1e-8;

    VerificationReport rep;
    rep.case_id = id;
    rep.grid_name = grid.name;
    rep.points = static_cast<std::int64_t>(grid.points.size());

    double max_corr = 0.0;
    double max_printed[2] = {0.0, 0.0};
    std::size_t readings = 1;
    WorstPoint worst;
    bool have_worst = false;

    for (const auto& [tc, x] : grid.points) {
        try {
            const double lhs = lhs_quadrature(tc, x, quad_tol).value;
            const double den = std::max(1.0, std::fabs(lhs));
            const double corr = rhs_corrected(tc, x, rhs_tol).value;
            const double e_corr = std::fabs(lhs - corr) / den;
            const auto printed = rhs_printed_readings(tc, x, rhs_tol);
            readings = printed.size();
            for (std::size_t i = 0; i < printed.size(); ++i) {
                const double e = std::fabs(lhs - printed[i].value) / den;
                if (e > max_printed[i]) max_printed[i] = e;
            }
            if (!have_worst || e_corr > max_corr) {
                max_corr = e_corr;
                worst = {tc.params.eta, tc.params.alpha, tc.params.a, tc.rho, x,
                         tc.k, tc.nu, tc.c, tc.gamma_scale};
                have_worst = true;
            }
        } catch (const error& e) {
            ++rep.eval_failures;
            if (rep.first_failure.empty()) rep.first_failure = e.what();
        }
    }

    rep.max_rel_err_corrected = max_corr;
    rep.max_rel_err_printed = (readings == 2) ? std::min(max_printed[0], max_printed[1])
                                              : max_printed[0];
    rep.worst_point = worst;
    if (rep.eval_failures > 0 || rep.max_rel_err_corrected > tol_accept)
        rep.status = Status::FAIL;
    else if (rep.max_rel_err_printed > tol_accept)
        rep.status = Status::PRINTED_MISMATCH;
    else
        rep.status = Status::CONFIRMED;
    return rep;
}

inline VerificationReport verify_default(CaseId id, double tol_accept = 1e-6) {
    return verify(id, default_grid(id), tol_accept);
}

} // namespace kstruve
