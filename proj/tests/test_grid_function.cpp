#include "doctest.h"

#include "weylkit/grid_function.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace weylkit;

TEST_CASE("construction and basic accessors") {
    GridFunction f(0.0, 0.5, 2, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    CHECK(f.size() == 3);
    CHECK(f.dim() == 2);
    CHECK(f.t_at(0) == 0.0);
    CHECK(f.t_at(2) == doctest::Approx(1.0));
    CHECK(f.t_end() == doctest::Approx(1.0));
    CHECK(f.cell_start() == doctest::Approx(-0.25));
    CHECK(f.cell_end() == doctest::Approx(1.25));
    CHECK(f.value(1, 0) == 3.0);
    CHECK(f.value(1, 1) == 4.0);
    CHECK(f.norm_at(0) == doctest::Approx(std::sqrt(5.0)));
    CHECK(f.sup_norm() == doctest::Approx(std::sqrt(61.0)));
    CHECK(f.domain() == Domain::HalfLine);
}

TEST_CASE("constructor rejects malformed inputs") {
    CHECK_THROWS_AS(GridFunction(0.0, 0.0, 1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(0.0, 1.0, 0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(0.0, 1.0, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(0.0, 1.0, 1, {}), std::invalid_argument);
}

TEST_CASE("index_of sends boundary ties to the right cell") {
    GridFunction f(0.0, 1.0, 1, {10.0, 11.0, 12.0, 13.0});
    // Cells are [-0.5, 0.5), [0.5, 1.5), ...
    CHECK(f.index_of(0.0) == 0);
    CHECK(f.index_of(0.49) == 0);
    CHECK(f.index_of(0.5) == 1);
    CHECK(f.index_of(1.49) == 1);
    CHECK(f.index_of(2.5) == 3);
    CHECK(f.index_of(-0.5) == 0);
    CHECK(f.index_of(3.49) == 3);
    CHECK_THROWS_AS(f.index_of(3.51), std::out_of_range);
    CHECK_THROWS_AS(f.index_of(-0.51), std::out_of_range);
}

TEST_CASE("boundary lattice recognition") {
    GridFunction f(0.0, 0.25, 1, std::vector<double>(8, 0.0));
    CHECK(f.on_boundary_lattice(-0.125));
    CHECK(f.on_boundary_lattice(0.125));
    CHECK(f.on_boundary_lattice(1.625));
    CHECK_FALSE(f.on_boundary_lattice(0.2));
    CHECK(f.on_boundary_lattice(0.125 + 1e-12));
}

TEST_CASE("zeros factory and slicing") {
    GridFunction z = GridFunction::zeros(1.0, 0.5, 4, 2, Domain::FullLine);
    CHECK(z.size() == 4);
    CHECK(z.sup_norm() == 0.0);
    CHECK(z.domain() == Domain::FullLine);

    GridFunction f(0.0, 1.0, 1, {1.0, 2.0, 3.0, 4.0, 5.0});
    GridFunction s = f.slice(1, 3);
    CHECK(s.size() == 3);
    CHECK(s.t0() == doctest::Approx(1.0));
    CHECK(s.value(0) == 2.0);
    CHECK(s.value(2) == 4.0);
    CHECK_THROWS_AS(f.slice(3, 5), std::out_of_range);
}

TEST_CASE("pointwise arithmetic requires identical grids") {
    GridFunction a(0.0, 1.0, 1, {1.0, 2.0});
    GridFunction b(0.0, 1.0, 1, {5.0, 7.0});
    GridFunction c = b - a;
    CHECK(c.value(0) == 4.0);
    CHECK(c.value(1) == 5.0);
    GridFunction d = a + b;
    CHECK(d.value(1) == 9.0);

    GridFunction shifted(0.5, 1.0, 1, {1.0, 2.0});
    CHECK_THROWS_AS(a - shifted, std::invalid_argument);
    GridFunction coarser(0.0, 2.0, 1, {1.0, 2.0});
    CHECK_THROWS_AS(a + coarser, std::invalid_argument);
}

TEST_CASE("add_on_overlap restricts to the common span") {
    GridFunction a(0.0, 1.0, 1, {1.0, 1.0, 1.0, 1.0});  // t in [0, 3]
    GridFunction b(2.0, 1.0, 1, {10.0, 10.0, 10.0});    // t in [2, 4]
    GridFunction s = add_on_overlap(a, b);
    CHECK(s.size() == 2);
    CHECK(s.t0() == doctest::Approx(2.0));
    CHECK(s.value(0) == 11.0);
    CHECK(s.value(1) == 11.0);

    GridFunction off(0.25, 1.0, 1, {1.0, 1.0});
    CHECK_THROWS_AS(add_on_overlap(a, off), std::invalid_argument);
    GridFunction far(10.0, 1.0, 1, {1.0, 1.0});
    CHECK_THROWS_AS(add_on_overlap(a, far), std::invalid_argument);
}
