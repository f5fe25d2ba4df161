#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <kstruve/pathway.hpp>

using namespace kstruve;
using Catch::Approx;

TEST_CASE("elementary operator values", "[pathway]") {
    // eta=1, alpha=0, a=1: plain weight (1 - t/x) over [0, x].
    const PathwayParams p{1.0, 0.0, 1.0};
    CHECK(pathway_integral(p, [](double) { return 1.0; }, 2.0, 1e-10).value
          == Approx(2.0).epsilon(1e-12));
    CHECK(pathway_integral(p, [](double t) { return t; }, 1.0, 1e-10).value
          == Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("power closed form at reference points", "[pathway]") {
    CHECK(pathway_power_closed({1.0, 0.0, 1.0}, 1.0, 2.0) == Approx(2.0).epsilon(1e-14));
    // Independently derived values.
    CHECK(pathway_power_closed({0.5, 0.5, 2.0}, 1.5, 1.0)
          == Approx(4.0 / 15.0).epsilon(1e-13));
    CHECK(pathway_power_closed({2.0, -1.0, 0.5}, 1.5, 3.0)
          == Approx(12.470765814495917).epsilon(1e-13));
}

TEST_CASE("quadrature agrees with the closed form at reference points", "[pathway]") {
    const auto q1 = pathway_integral({0.5, 0.5, 2.0},
                                     [](double t) { return std::sqrt(t); }, 1.0, 1e-10);
    CHECK(q1.value == Approx(4.0 / 15.0).epsilon(1e-10));
    const auto q2 = pathway_integral({2.0, -1.0, 0.5},
                                     [](double t) { return std::sqrt(t); }, 3.0, 1e-10);
    CHECK(q2.value == Approx(12.470765814495917).epsilon(1e-10));
}

TEST_CASE("quadrature matches the closed form across the power grid", "[pathway]") {
    for (double eta : {0.5, 1.0, 2.0}) {
        for (double alpha : {-1.0, 0.0, 0.5}) {
            for (double a : {0.5, 1.0, 2.0}) {
                for (double beta : {0.5, 1.0, 1.5, 3.0}) {
                    for (double x : {0.5, 1.0, 2.0}) {
                        const PathwayParams p{eta, alpha, a};
                        const double closed = pathway_power_closed(p, beta, x);
                        const double quad =
                            pathway_integral(p,
                                             [beta](double t) { return std::pow(t, beta - 1.0); },
                                             x, 1e-9)
                                .value;
                        INFO("eta=" << eta << " alpha=" << alpha << " a=" << a
                                    << " beta=" << beta << " x=" << x);
                        CHECK(std::fabs(quad - closed)
                              <= 1e-8 * std::max(1.0, std::fabs(closed)));
                    }
                }
            }
        }
    }
}

TEST_CASE("operator is linear in the integrand", "[pathway]") {
    struct Case {
        PathwayParams p;
        double x, c1, c2;
    };
    const Case cases[] = {
        {{1.0, 0.0, 1.0}, 1.0, 2.0, -3.0},  {{0.5, 0.5, 2.0}, 1.0, 1.0, 1.0},
        {{2.0, -1.0, 0.5}, 3.0, 0.5, 2.0},  {{1.0, 0.5, 1.0}, 2.0, -1.0, 4.0},
        {{0.5, -0.5, 1.0}, 0.5, 3.0, 0.25}, {{2.0, 0.0, 2.0}, 1.5, 1.5, -0.5},
        {{1.5, 0.25, 1.0}, 1.0, 2.0, 2.0},  {{0.75, 0.0, 0.5}, 2.0, -2.0, 1.0},
        {{1.0, -0.9, 1.0}, 1.0, 1.0, -1.0}, {{2.0, 0.75, 1.0}, 0.5, 0.1, 10.0},
    };
    const auto f1 = [](double t) { return std::sqrt(t); };
    const auto f2 = [](double t) { return std::cos(t); };
    for (const auto& cs : cases) {
        const auto a = pathway_integral(cs.p, f1, cs.x, 1e-10);
        const auto b = pathway_integral(cs.p, f2, cs.x, 1e-10);
        const auto both = pathway_integral(
            cs.p, [&](double t) { return cs.c1 * f1(t) + cs.c2 * f2(t); }, cs.x, 1e-10);
        const double budget = both.err_estimate + std::fabs(cs.c1) * a.err_estimate
                            + std::fabs(cs.c2) * b.err_estimate;
        INFO("eta=" << cs.p.eta << " alpha=" << cs.p.alpha << " a=" << cs.p.a
                    << " x=" << cs.x);
        CHECK(std::fabs(both.value - (cs.c1 * a.value + cs.c2 * b.value)) <= budget);
    }
}

TEST_CASE("loosening the tolerance never increases work", "[pathway]") {
    const PathwayParams p{0.5, 0.5, 2.0};
    const auto f = [](double t) { return std::sqrt(t) * std::cos(3.0 * t); };
    std::int64_t prev = std::numeric_limits<std::int64_t>::max();
    for (double tol = 1e-12; tol < 1e-5; tol *= 2.0) {
        const auto r = pathway_integral(p, f, 1.0, tol);
        CHECK(r.work <= prev);
        prev = r.work;
    }
}

TEST_CASE("parameter validation", "[pathway]") {
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(pathway_integral({1.0, 1.0, 1.0}, one, 1.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_integral({1.0, 1.5, 1.0}, one, 1.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_integral({1.0, 0.0, 0.0}, one, 1.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_integral({0.0, 0.0, 1.0}, one, 1.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_integral({1.0, 0.0, 1.0}, one, 0.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_integral({1.0, 0.0, 1.0}, one, -1.0, 1e-8), domain_error);
    CHECK_THROWS_AS(pathway_power_closed({1.0, 0.0, 1.0}, 0.0, 1.0), domain_error);
}

TEST_CASE("the integrand is never evaluated at the endpoints", "[pathway]") {
    const PathwayParams p{1.0, 0.25, 1.0};
    const double x = 2.0;
    const double upper = x / (p.a * (1.0 - p.alpha));
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -tmin;
    pathway_integral(p,
                     [&](double t) {
                         tmin = std::min(tmin, t);
                         tmax = std::max(tmax, t);
                         return std::sqrt(t);
                     },
                     x, 1e-10);
    CHECK(tmin > 0.0);
    CHECK(tmax < upper);
}

TEST_CASE("integrand failures carry the evaluation point", "[pathway]") {
    const PathwayParams p{1.0, 0.0, 1.0};
    try {
        pathway_integral(p,
                         [](double t) -> double {
                             if (t < 0.1) throw domain_error("unsupported region");
                             return t;
                         },
                         1.0, 1e-10);
        FAIL("expected integrand_error");
    } catch (const integrand_error& e) {
        CHECK(std::string(e.what()).find("integrand at t=") != std::string::npos);
        CHECK(e.location < 0.1);
        CHECK(e.location > 0.0);
    }
}

TEST_CASE("unresolvable integrands raise nonconvergence", "[pathway]") {
    // t^(-0.99) is integrable, but its closed-form counterpart is the only
    // practical route: the quadrature cannot reach 1e-9 within the depth cap.
    const PathwayParams p{1.0, 0.0, 1.0};
    CHECK_THROWS_AS(
        pathway_integral(p, [](double t) { return std::pow(t, -0.99); }, 1.0, 1e-9),
        nonconvergence_error);
}
