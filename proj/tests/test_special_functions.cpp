#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "wavereg/special_functions.hpp"

using wavereg::regularized_incomplete_beta;

TEST_CASE("regularized incomplete beta endpoints", "[special]") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("closed-form beta values", "[special]") {
    // a = b = 1 is the uniform distribution: I_x(1,1) = x.
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.5) == Catch::Approx(0.5).margin(1e-14));
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.3) == Catch::Approx(0.3).margin(1e-14));
    // I_x(1, b) = 1 - (1 - x)^b.
    CHECK(regularized_incomplete_beta(1.0, 4.0, 0.3) ==
          Catch::Approx(1.0 - std::pow(0.7, 4.0)).margin(1e-12));
    // I_x(a, 1) = x^a.
    CHECK(regularized_incomplete_beta(3.0, 1.0, 0.4) ==
          Catch::Approx(std::pow(0.4, 3.0)).margin(1e-12));
    // Symmetric case: I_{1/2}(a, a) = 1/2.
    CHECK(regularized_incomplete_beta(7.5, 7.5, 0.5) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("symmetry identity I_x(a,b) = 1 - I_{1-x}(b,a)", "[special]") {
    for (double a : {0.5, 1.0, 2.5, 10.0}) {
        for (double b : {0.5, 1.0, 2.5, 10.0}) {
            for (double x : {0.05, 0.2, 0.5, 0.8, 0.95}) {
                const double lhs = regularized_incomplete_beta(a, b, x);
                const double rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
                CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
            }
        }
    }
}

TEST_CASE("beta agrees with independent quadrature", "[special]") {
    for (double a : {0.5, 1.0, 2.5, 10.0}) {
        for (double b : {0.5, 1.0, 2.5, 22.0}) {
            for (double x : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
                const double got = regularized_incomplete_beta(a, b, x);
                const double want = oracle::beta_cdf_quadrature(a, b, x);
                INFO("a=" << a << " b=" << b << " x=" << x);
                CHECK(std::fabs(got - want) < 1e-8);
            }
        }
    }
}

TEST_CASE("beta is strictly increasing in x", "[special]") {
    // Strict until the CDF saturates to 1.0 in double precision (e.g.
    // a=0.5, b=23.5 reaches 1.0 well before x does); never decreasing.
    for (double a : {0.5, 2.0, 11.0}) {
        for (double b : {0.5, 2.0, 23.5}) {
            double prev = 0.0;
            for (double x = 0.02; x < 1.0; x += 0.02) {
                const double cur = regularized_incomplete_beta(a, b, x);
                INFO("a=" << a << " b=" << b << " x=" << x);
                REQUIRE(cur >= prev);
                if (prev < 1.0) REQUIRE(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("beta domain errors", "[special]") {
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), wavereg::Error);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -1.0, 0.5), wavereg::Error);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, -0.1), wavereg::Error);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), wavereg::Error);
    CHECK_THROWS_AS(regularized_incomplete_beta(std::nan(""), 1.0, 0.5), wavereg::Error);
}
