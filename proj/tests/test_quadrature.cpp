#include "doctest.h"

#include "weylkit/errors.hpp"
#include "weylkit/quadrature.hpp"

#include <cmath>

using namespace weylkit;

TEST_CASE("gk15 integrates smooth functions to near machine accuracy") {
    const QuadResult r = gk15([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    CHECK(r.error < 1e-10);
}

TEST_CASE("adaptive integrate matches closed forms") {
    const QuadResult atanint =
        integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0);
    CHECK(atanint.value == doctest::Approx(std::atan(1.0)).epsilon(1e-12));

    // A moderately oscillatory integrand that forces subdivision.
    const QuadResult osc =
        integrate([](double x) { return std::sin(40.0 * x); }, 0.0, 3.0);
    CHECK(osc.value == doctest::Approx((1.0 - std::cos(120.0)) / 40.0).epsilon(1e-10));
}

TEST_CASE("integrate raises NumericError when the panel budget is exhausted") {
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(500.0 * x * x); }, 0.0, 20.0,
                              1e-14, 1e-14, 4),
                    NumericError);
}

TEST_CASE("integrate_power_left handles endpoint singularities exactly") {
    // int_0^1 s^(-1/2) ds = 2.
    const QuadResult sqrt_int = integrate_power_left([](double) { return 1.0; }, -0.5, 1.0);
    CHECK(sqrt_int.value == doctest::Approx(2.0).epsilon(1e-12));

    // Beta-type oracle: int_0^1 s^(b-1) (1-s) ds = 1/b - 1/(b+1).
    const double b = 0.6;
    const QuadResult beta =
        integrate_power_left([](double s) { return 1.0 - s; }, b - 1.0, 1.0);
    CHECK(beta.value == doctest::Approx(1.0 / b - 1.0 / (b + 1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(integrate_power_left([](double) { return 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("integrate_algebraic_tail matches power-law tails") {
    const QuadResult inv2 = integrate_algebraic_tail(
        [](double s) { return 1.0 / (s * s); }, 1.0, 2.0);
    CHECK(inv2.value == doctest::Approx(1.0).epsilon(1e-12));

    const QuadResult inv32 = integrate_algebraic_tail(
        [](double s) { return std::pow(s, -1.5); }, 2.0, 1.5);
    CHECK(inv32.value == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(integrate_algebraic_tail([](double) { return 0.0; }, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("sup_on_grid locates interior maxima") {
    CHECK(sup_on_grid([](double t) { return std::sin(t); }, 0.0, 3.141592653589793) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // t e^-t peaks at t = 1 with value 1/e.
    CHECK(sup_on_grid([](double t) { return t * std::exp(-t); }, 0.0, 10.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}
