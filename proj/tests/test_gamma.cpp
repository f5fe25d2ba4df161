#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <kstruve/gamma.hpp>

#include "oracles.hpp"

using namespace kstruve;
using Catch::Approx;

TEST_CASE("k-gamma fixed points", "[gamma]") {
    // Gamma_k(k) = 1 for every k.
    CHECK(k_gamma(0.5, 0.5) == Approx(1.0).epsilon(1e-14));
    CHECK(k_gamma(1.0, 1.0) == Approx(1.0).epsilon(1e-14));
    CHECK(k_gamma(2.0, 2.0) == Approx(1.0).epsilon(1e-14));
    // k = 1 is the ordinary gamma function.
    CHECK(k_gamma(5.0, 1.0) == Approx(24.0).epsilon(1e-14));
    CHECK(k_gamma(0.5, 1.0) == Approx(std::sqrt(detail::pi)).epsilon(1e-14));
}

TEST_CASE("k-gamma recurrence on the 3x20 grid", "[gamma]") {
    // Gamma_k(x + k) = x Gamma_k(x)
    for (double k : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 20; ++i) {
            const double x = 0.25 * (i + 1); // 0.25 .. 5.0
            const double lhs = k_gamma(x + k, k);
            const double rhs = x * k_gamma(x, k);
            INFO("k=" << k << " x=" << x);
            CHECK(lhs == Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("k-gamma reduction to ordinary gamma", "[gamma]") {
    // Gamma_k(x) = k^(x/k - 1) Gamma(x/k)
    for (double k : {0.5, 2.0, 3.0}) {
        for (double x : {0.3, 1.0, 2.5, 4.0, 7.0}) {
            const double expect = std::pow(k, x / k - 1.0) * std::tgamma(x / k);
            INFO("k=" << k << " x=" << x);
            CHECK(k_gamma(x, k) == Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("log form is consistent with the direct form", "[gamma]") {
    for (double k : {0.5, 1.0, 2.0}) {
        for (double x : {0.2, 1.0, 3.0, 10.0}) {
            INFO("k=" << k << " x=" << x);
            CHECK(std::exp(log_k_gamma(x, k)) == Approx(k_gamma(x, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("log-gamma at large argument", "[gamma]") {
    const double lg300 = log_k_gamma(300.0, 1.0);
    CHECK(lg300 == Approx(1409.2020674704117875).epsilon(1e-14));
    // Independent cross-check through the Stirling series.
    const double stirling = static_cast<double>(test_oracle::stirling_lgamma(300.0L));
    CHECK(lg300 == Approx(stirling).epsilon(1e-13));
}

TEST_CASE("reflection handles negative non-integer arguments", "[gamma]") {
    const double sqrt_pi = std::sqrt(detail::pi);
    CHECK(k_gamma(-0.5, 1.0) == Approx(-2.0 * sqrt_pi).epsilon(1e-13));
    CHECK(k_gamma(-1.5, 1.0) == Approx(4.0 * sqrt_pi / 3.0).epsilon(1e-13));
    // Gamma_2(-1) = 2^(-3/2) Gamma(-1/2)
    CHECK(k_gamma(-1.0, 2.0)
          == Approx(std::pow(2.0, -1.5) * -2.0 * sqrt_pi).epsilon(1e-13));
}

TEST_CASE("poles and domain violations throw", "[gamma]") {
    CHECK_THROWS_AS(k_gamma(0.0, 1.0), pole_error);
    CHECK_THROWS_AS(k_gamma(-1.0, 1.0), pole_error);
    CHECK_THROWS_AS(k_gamma(-2.0, 1.0), pole_error);
    CHECK_THROWS_AS(k_gamma(1.0, 0.0), domain_error);
    CHECK_THROWS_AS(k_gamma(1.0, -1.0), domain_error);
    CHECK_THROWS_AS(log_k_gamma(-0.5, 1.0), domain_error);
    CHECK_THROWS_AS(log_k_gamma(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(k_gamma(300.0, 1.0), overflow_error); // lnGamma(300) > 709
}
