#include "doctest.h"

#include "weylkit/pencil.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace weylkit;

TEST_CASE("diagonal pencil accessors and degeneracy flags") {
    PencilModel m({1.0, 0.0, 2.5}, {3.0, 1.0, 0.5});
    CHECK(m.size() == 3);
    CHECK(m.m(0) == 1.0);
    CHECK(m.a(2) == 0.5);
    CHECK_FALSE(m.degenerate(0));
    CHECK(m.degenerate(1));
    CHECK(m.has_degenerate());
    CHECK(m.rate(0) == doctest::Approx(3.0));
    CHECK(m.rate(2) == doctest::Approx(0.2));
    CHECK(std::isinf(m.rate(1)));
    CHECK(m.masses() == std::vector<double>{1.0, 0.0, 2.5});
    CHECK(m.stiffnesses() == std::vector<double>{3.0, 1.0, 0.5});

    PencilModel plain({1.0, 2.0}, {3.0, 1.0});
    CHECK_FALSE(plain.has_degenerate());
}

TEST_CASE("pencil construction rejects bad coefficients") {
    CHECK_THROWS_AS(PencilModel({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PencilModel({1.0, 2.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(PencilModel({-1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(PencilModel({1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PencilModel({1.0}, {-2.0}), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(PencilModel({nan}, {1.0}), std::invalid_argument);
}

TEST_CASE("sector test validates its own parameters") {
    PencilModel m({1.0}, {1.0});
    CHECK_THROWS_AS(check_condition_P(m, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_P(m, 0.1, 1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_P(m, 0.1, 1.0, 1e4, 3), std::invalid_argument);
}

TEST_CASE("nondegenerate pencil: pole free with first-order resolvent decay") {
    PencilModel m({1.0, 2.0}, {3.0, 1.0});
    // Rates are 3 and 0.5, both outside the sector for c = 0.1.
    // Fit from r = 1 so the samples sit in the decay regime, not on the
    // low-frequency plateau where the norm is still ~1/min(a).
    ConditionPReport rep = check_condition_P(m, 0.1, 1.0, 1e4, 25);
    CHECK(rep.pole_free);
    CHECK(rep.min_denom > 0.0);
    CHECK(rep.n_samples == 25 * 7);
    CHECK(rep.beta_fit == doctest::Approx(1.0).epsilon(0.05));
    CHECK(rep.beta_weighted == doctest::Approx(1.0).epsilon(0.05));
    CHECK(rep.M_fit > 0.0);
    // The fitted prefactor law dominates every sample by construction;
    // spot-check it at a radius in range.
    const double r = 100.0;
    const double lhs = 1.0 / std::abs(r * 2.0 + 1.0); // slot 2 dominates
    CHECK(rep.M_fit * std::pow(1.0 + r, -rep.beta_fit) >= lhs * (1.0 - 1e-9));
}

TEST_CASE("rates accumulating at infinity spoil the uniform decay order") {
    // m_i = 1/i: mass eigenvalues pile up at zero, so the resolvent stays
    // order one far out along the region and the fitted decay drops well
    // below first order even though no pole enters the region.
    std::vector<double> mass, stiff;
    for (int i = 1; i <= 40; ++i) {
        mass.push_back(1.0 / static_cast<double>(i));
        stiff.push_back(1.0);
    }
    PencilModel m(std::move(mass), std::move(stiff));
    ConditionPReport rep = check_condition_P(m, 0.1, 1.0, 1e4, 25);
    CHECK(rep.pole_free); // rates are i >= 1, outside the sector
    CHECK(rep.beta_fit < 0.95);
    CHECK(rep.beta_fit >= 0.0);
}

TEST_CASE("a slow rate inside the sector is flagged as a pole") {
    PencilModel m({1.0}, {0.05});
    ConditionPReport rep = check_condition_P(m, 0.1);
    CHECK_FALSE(rep.pole_free);
}

TEST_CASE("degenerate slot blocks plain decay but not the mass-weighted one") {
    PencilModel m({1.0, 0.0}, {3.0, 1.0});
    ConditionPReport rep = check_condition_P(m, 0.1, 1.0, 1e4, 25);
    CHECK(rep.pole_free);
    // Plain norm is pinned at 1/a on the degenerate slot: no decay.
    CHECK(rep.beta_fit < 0.1);
    // Weighted norm sees only the dynamic slot and decays at first order.
    CHECK(rep.beta_weighted == doctest::Approx(1.0).epsilon(0.05));
}
