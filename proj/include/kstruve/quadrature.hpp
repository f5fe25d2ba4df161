#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "errors.hpp"
#include "eval_result.hpp"

namespace kstruve {

struct QuadOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-10;
    int max_depth = 40;            // bisection depth per segment
    std::int64_t max_segments = 20000;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (positive half of the rule).
// Nodes are strictly interior, so integrands are never evaluated at the
// segment endpoints.
inline constexpr double gk15_xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk15_wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double value; // Kronrod estimate
    double err;   // |Kronrod - Gauss|
};

template <typename F>
PanelResult gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = gk15_wgk[7] * fc;
    double resg = gk15_wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk15_xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += gk15_wgk[j] * (f1 + f2);
        if (j % 2 != 0) resg += gk15_wg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

struct Segment {
    double a, b;
    double value, err;
    int depth;
};

struct SegmentWorse {
    // priority_queue keeps the "largest" on top; order by error, with the
    // left endpoint breaking ties so refinement order is deterministic
    bool operator()(const Segment& l, const Segment& r) const {
        if (l.err != r.err) return l.err < r.err;
        return l.a > r.a;
    }
};

} // namespace detail

// Globally adaptive Gauss-Kronrod 7-15 integration of f over [a, b]: the
// segment with the largest error estimate is bisected until the summed
// error meets max(abs_tol, rel_tol * |integral|).  Segments that reach the
// depth cap are retired; if the retired error alone exceeds the target the
// integral is declared nonconvergent rather than silently accepted.
template <typename F>
EvalResult integrate_adaptive(F&& f, double a, double b, QuadOptions opt) {
    if (!(b > a)) throw domain_error("integrate_adaptive: requires b > a");

    std::priority_queue<detail::Segment, std::vector<detail::Segment>, detail::SegmentWorse> open;
    const auto first = detail::gk15(f, a, b);
    double total = first.value;
    double open_err = first.err;
    double retired_err = 0.0;
    std::int64_t evals = 15;
    std::int64_t segments = 1;
    open.push({a, b, first.value, first.err, 0});

    for (;;) {
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::fabs(total));
        if (open_err + retired_err <= target) break;
        if (retired_err > target)
            throw nonconvergence_error("integrate_adaptive: depth cap reached with error above tolerance");
        if (open.empty())
            throw nonconvergence_error("integrate_adaptive: all segments at depth cap, error above tolerance");
        if (segments >= opt.max_segments)
            throw nonconvergence_error("integrate_adaptive: segment cap exceeded");

        const detail::Segment worst = open.top();
        open.pop();
        if (worst.depth >= opt.max_depth) {
            open_err -= worst.err;
            retired_err += worst.err;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        evals += 30;
        ++segments;
        total += left.value + right.value - worst.value;
        open_err += left.err + right.err - worst.err;
        open.push({worst.a, mid, left.value, left.err, worst.depth + 1});
        open.push({mid, worst.b, right.value, right.err, worst.depth + 1});
    }
    return {total, open_err + retired_err, evals};
}

} // namespace kstruve
