#include "doctest.h"

#include "weylkit/errors.hpp"
#include "weylkit/special.hpp"

#include <cmath>
#include <stdexcept>

using namespace weylkit;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("reciprocal gamma: values, poles and signs") {
    CHECK(reciprocal_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-14));
    CHECK(reciprocal_gamma(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    // Poles of Gamma are zeros here.
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-7.0) == 0.0);
    // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4 sqrt(pi)/3.
    CHECK(reciprocal_gamma(-0.5) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-13));
    CHECK(reciprocal_gamma(-1.5) ==
          doctest::Approx(3.0 / (4.0 * std::sqrt(kPi))).epsilon(1e-13));
    // Far right tail underflows to zero without overflowing.
    CHECK(reciprocal_gamma(400.0) == 0.0);
}

TEST_CASE("order one half reduces to the exact Gaussian form") {
    WrightFunction w(0.5);
    for (double s : {0.0, 0.3, 1.0, 4.0, 10.0, 25.0}) {
        const double exact = std::exp(-0.25 * s * s) / std::sqrt(kPi);
        CHECK(w.eval(s) == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("evaluation branches agree where they hand over") {
    for (double g : {0.3, 0.7}) {
        WrightFunction w(g);
        const double r = w.switch_radius();
        REQUIRE(r > 0.0);
        // Series -> contour integral: both carry many digits at the crossover.
        const SeriesValue sv = w.series(r);
        CHECK(sv.value == doctest::Approx(w.integral_form(r)).epsilon(1e-9));
        // Contour integral -> closed-form tail: the tail form carries only a
        // few digits, but hands over where values are absolutely negligible.
        const double c = w.contour_limit();
        REQUIRE(c > r);
        CHECK(w.integral_form(c) == doctest::Approx(w.asymptotic(c)).epsilon(0.1));
    }
}

TEST_CASE("density moments match the Gamma-ratio closed form") {
    for (double g : {0.3, 0.5, 0.8}) {
        WrightFunction w(g);
        for (double nu : {0.0, 1.0, 2.0}) {
            const double exact = WrightFunction::moment_exact(g, nu);
            CHECK(exact == doctest::Approx(std::tgamma(nu + 1.0) /
                                           std::tgamma(g * nu + 1.0)).epsilon(1e-14));
            CHECK(w.moment(nu) == doctest::Approx(exact).epsilon(1e-8));
        }
    }
}

TEST_CASE("Laplace transform of the density matches relaxation closed forms") {
    // int W exp(-p s) ds at order 1/2 equals exp(p^2) erfc(p).
    WrightFunction w(0.5);
    for (double p : {0.1, 1.0, 3.0, 10.0}) {
        const double exact = std::exp(p * p) * std::erfc(p);
        CHECK(w.laplace(0.0, p) == doctest::Approx(exact).epsilon(1e-9));
    }
    // Weighted transform, differentiating the closed form in p:
    // int s W e^{-ps} = 2/sqrt(pi) - 2 p e^{p^2} erfc(p).
    for (double p : {0.5, 2.0}) {
        const double direct = 2.0 / std::sqrt(kPi) - 2.0 * p * std::exp(p * p) * std::erfc(p);
        CHECK(w.laplace(1.0, p) == doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("Mittag-Leffler agrees with the complementary error function family") {
    // E_{1/2}(-x) = e^{x^2} erfc(x).
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 12.0, 25.0}) {
        const double exact = std::exp(x * x) * std::erfc(x);
        CHECK(mittag_leffler(0.5, 1.0, -x) == doctest::Approx(exact).epsilon(1e-9));
    }
    // Far tail follows the leading reflected term 1/(x sqrt(pi)).
    const double far = mittag_leffler(0.5, 1.0, -1e4);
    CHECK(far == doctest::Approx(1.0 / (1e4 * std::sqrt(kPi))).epsilon(1e-3));

    // Second-parameter family: E_{1/2,1/2}(-x) = 1/sqrt(pi) - x e^{x^2} erfc(x).
    for (double x : {0.5, 1.0, 3.0}) {
        const double exact = 1.0 / std::sqrt(kPi) - x * std::exp(x * x) * std::erfc(x);
        CHECK(mittag_leffler(0.5, 0.5, -x) == doctest::Approx(exact).epsilon(1e-8));
    }
}

TEST_CASE("classical limits of the Mittag-Leffler function") {
    for (double x : {-3.0, -0.5, 0.0, 1.0}) {
        CHECK(mittag_leffler(1.0, 1.0, x) == doctest::Approx(std::exp(x)).epsilon(1e-12));
    }
    // E_{1,2}(x) = (e^x - 1)/x.
    CHECK(mittag_leffler(1.0, 2.0, 2.0) ==
          doctest::Approx((std::exp(2.0) - 1.0) / 2.0).epsilon(1e-10));
    CHECK(mittag_leffler(1.0, 2.0, -50.0) ==
          doctest::Approx((1.0 - std::exp(-50.0)) / 50.0).epsilon(1e-10));
    // Positive arguments stay on the series branch.
    CHECK(mittag_leffler(0.7, 1.0, 2.0) > 1.0);
}

TEST_CASE("estimated error bars are honest near zero and moderate arguments") {
    for (double x : {-20.0, -5.0, -1.0, -0.1}) {
        MLValue v = mittag_leffler_est(0.5, 1.0, x);
        const double exact = std::exp(x * x) * std::erfc(-x);
        CHECK(std::abs(v.value - exact) <= std::max(10.0 * v.error, 1e-12));
    }
}

TEST_CASE("constructor validates the order") {
    CHECK_THROWS_AS(WrightFunction(0.0), std::invalid_argument);
    CHECK_THROWS_AS(WrightFunction(1.0), std::invalid_argument);
    CHECK_THROWS_AS(WrightFunction(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(mittag_leffler(1.5, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, -1.0), std::invalid_argument);
}
