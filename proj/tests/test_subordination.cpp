#include "doctest.h"

#include "weylkit/special.hpp"
#include "weylkit/subordination.hpp"

#include <cmath>
#include <stdexcept>

using namespace weylkit;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("relaxation profile matches the Mittag-Leffler oracle") {
    for (double g : {0.4, 0.7}) {
        SubordinatedFamily fam(g, 1.0);
        CHECK(fam.S(0.0) == doctest::Approx(1.0).epsilon(1e-10));
        for (double t = 1e-3; t <= 1e3; t *= 10.0) {
            const double oracle = mittag_leffler(g, 1.0, -std::pow(t, g));
            CHECK(fam.S(t) == doctest::Approx(oracle).epsilon(1e-6));
        }
    }
}

TEST_CASE("kernel profile matches t^{g-1} E_{g,g}(-lambda t^g)") {
    for (double g : {0.5, 0.75}) {
        for (double lam : {1.0, 3.0}) {
            SubordinatedFamily fam(g, lam);
            for (double t : {0.01, 0.1, 1.0, 10.0, 100.0}) {
                const double oracle =
                    std::pow(t, g - 1.0) * mittag_leffler(g, g, -lam * std::pow(t, g));
                CHECK(fam.R(t) == doctest::Approx(oracle).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("kernel is positive, singular at zero and integrates to 1/lambda") {
    SubordinatedFamily fam(0.6, 2.0);
    CHECK(fam.R(1e-6) > fam.R(1e-3));
    CHECK(fam.R(1e-3) > fam.R(1.0));
    // Midpoint-rule mass against the exact total integral 1/lambda: the
    // running integral of R is (1 - S)/lambda, so integrate to T and add the
    // remainder S(T)/lambda.
    const double T = 50.0;
    const double mass_to_T = (1.0 - fam.S(T)) / 2.0;
    double riemann = 0.0;
    const std::size_t n = 20000;
    const double du = std::pow(T, 0.25) / n; // t = u^4 grading absorbs t^{g-1}
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (i + 0.5) * du;
        const double t = std::pow(u, 4.0);
        riemann += fam.R(t) * 4.0 * std::pow(u, 3.0) * du;
    }
    CHECK(riemann == doctest::Approx(mass_to_T).epsilon(1e-4));
}

TEST_CASE("weighted small- and large-time limits at order one half") {
    SubordinatedFamily fam(0.5, 1.0);
    // t^{1-g} R(t) -> 1/Gamma(g) as t -> 0; the next series term leaves a
    // relative correction of order t^g.
    const double small = std::pow(1e-6, 0.5) * fam.R(1e-6);
    CHECK(small == doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(5e-3));
    // t^{1+g} R(t) -> lambda^{-2} / |Gamma(-g)| as t -> infinity.
    const double large = std::pow(1e3, 1.5) * fam.R(1e3);
    CHECK(large == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(5e-3));
}

TEST_CASE("two-sided estimate verification reports bounded weighted profiles") {
    FamilyEstimateReport rep = verify_family_estimates(0.5, 1.0);
    CHECK(rep.bounded_small);
    CHECK(rep.bounded_large);
    CHECK(rep.n_samples > 50);
    // Log-log slopes of R itself: g*beta - 1 near zero, -1 - g at infinity.
    CHECK(rep.slope_small == doctest::Approx(-0.5).epsilon(0.1));
    CHECK(rep.slope_large == doctest::Approx(-1.5).epsilon(0.1));
    // Weighted sups near the exact limiting constants.
    CHECK(rep.M1 == doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(0.1));
    CHECK(rep.M2 == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(0.1));

    FamilyEstimateReport fast = verify_family_estimates(0.8, 3.0);
    CHECK(fast.bounded_small);
    CHECK(fast.bounded_large);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(SubordinatedFamily(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SubordinatedFamily(0.5, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(SubordinatedFamily(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_family_estimates(0.5, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(verify_family_estimates(0.5, 1.0, 1.0, 1.0, 2.0), std::invalid_argument);
}
