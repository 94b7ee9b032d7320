#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "specq/specfun.hpp"

using namespace specq;

TEST_CASE("lambert_w0 exact anchors") {
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("lambert_w0 against bisection on w e^w = z") {
    const double z = -3.0 * std::exp(-3.0);
    const double w_ref =
        oracle::bisect([z](double w) { return w * std::exp(w) - z; }, -1.0, 0.0);
    const double w = lambert_w0(z);
    CHECK(w == doctest::Approx(w_ref).epsilon(1e-11));
    // the shifted root is the M = 3 Planck peak
    CHECK(3.0 + w == doctest::Approx(2.821439).epsilon(1e-5));
}

TEST_CASE("lambert_w0 inverse property over [-1, 10]") {
    for (double x = -1.0; x <= 10.0; x += 0.25) {
        const double z = x * std::exp(x);
        const double w = lambert_w0(z);
        CHECK(w == doctest::Approx(x).epsilon(1e-11));
    }
}

TEST_CASE("lambert_w0 domain and convergence errors") {
    CHECK_THROWS_AS(lambert_w0(-0.4), std::domain_error);
    CHECK_THROWS_AS(lambert_w0(1.0, ConvergenceControl{1e-13, 0.0, 0}),
                    std::invalid_argument);
}

TEST_CASE("gamma_real factorials") {
    CHECK(gamma_real(4.0) == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(gamma_real(6.0) == doctest::Approx(120.0).epsilon(1e-13));
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gamma_real half-integer recursion from sqrt(pi)") {
    // Gamma(5.5) = 4.5 * 3.5 * 2.5 * 1.5 * 0.5 * sqrt(pi)
    double ref = std::sqrt(M_PI);
    for (double s = 0.5; s < 5.0; s += 1.0) ref *= s;
    CHECK(gamma_real(5.5) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("gamma_real functional equation") {
    for (double s : {0.5, 1.3, 2.7, 4.9}) {
        CHECK(gamma_real(s + 1.0) ==
              doctest::Approx(s * gamma_real(s)).epsilon(1e-12));
    }
}

TEST_CASE("gamma_real domain") {
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-2.5), std::domain_error);
}

TEST_CASE("riemann_zeta closed forms") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-13));
    CHECK(riemann_zeta(4.0) ==
          doctest::Approx(std::pow(M_PI, 4) / 90.0).epsilon(1e-13));
}

TEST_CASE("riemann_zeta against Euler-Maclaurin summation") {
    for (double s : {1.5, 2.5, 3.5, 5.0, 7.5}) {
        CHECK(riemann_zeta(s) ==
              doctest::Approx(oracle::zeta_euler_maclaurin(s)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(0.5), std::domain_error);
}

TEST_CASE("dirichlet_eta values and identity") {
    CHECK(dirichlet_eta(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(dirichlet_eta(2.0) ==
          doctest::Approx(M_PI * M_PI / 12.0).epsilon(1e-13));
    CHECK(dirichlet_eta(4.0) ==
          doctest::Approx((1.0 - std::pow(2.0, -3)) * riemann_zeta(4.0))
              .epsilon(1e-13));
    for (double s : {1.5, 2.0, 3.0, 4.0, 6.0}) {
        CHECK(dirichlet_eta(s) ==
              doctest::Approx((1.0 - std::pow(2.0, 1.0 - s)) * riemann_zeta(s))
                  .epsilon(1e-12));
    }
    CHECK_THROWS_AS(dirichlet_eta(0.0), std::domain_error);
}

TEST_CASE("polylog endpoints match zeta and eta") {
    CHECK(polylog_neg_arg(4.0, 1.0) ==
          doctest::Approx(riemann_zeta(4.0)).epsilon(1e-13));
    CHECK(polylog_neg_arg(4.0, -1.0) ==
          doctest::Approx(-dirichlet_eta(4.0)).epsilon(1e-13));
}

TEST_CASE("polylog interior points against the truncated series") {
    double bound = 0.0;
    const double ref = oracle::polylog_series(4.0, -0.5, &bound, 200);
    REQUIRE(bound < 1e-15);
    CHECK(polylog_neg_arg(4.0, -0.5) == doctest::Approx(ref).epsilon(1e-12));

    const double ref2 = oracle::polylog_series(3.0, 0.75, &bound, 400);
    REQUIRE(bound < 1e-15);
    CHECK(polylog_neg_arg(3.0, 0.75) == doctest::Approx(ref2).epsilon(1e-12));
}

TEST_CASE("polylog domain") {
    CHECK_THROWS_AS(polylog_neg_arg(4.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(polylog_neg_arg(4.0, -1.0001), std::domain_error);
    CHECK_THROWS_AS(polylog_neg_arg(0.9, 0.5), std::domain_error);
}

TEST_CASE("erf anchors and oddness") {
    CHECK(specq::erf(0.0) == 0.0);
    // Table entry: the Gaussian half-power fraction is erf(sqrt(ln 2))
    CHECK(specq::erf(std::sqrt(std::log(2.0))) ==
          doctest::Approx(0.7610).epsilon(5e-4));
    for (double x : {0.1, 0.5, 1.0, 1.7, 2.5, 3.0}) {
        CHECK(specq::erf(x) - oracle::erf_series(x) ==
              doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(specq::erf(-x) == -specq::erf(x));
    }
    CHECK(specq::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-12));
    CHECK(specq::erf(8.0) == doctest::Approx(1.0).epsilon(1e-15));
}
