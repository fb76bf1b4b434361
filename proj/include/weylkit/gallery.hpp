#pragma once

#include "weylkit/grid_function.hpp"

#include <string>
#include <vector>

namespace weylkit {

/**
 * Parameters for the built-in example functions.  A gallery call samples the
 * chosen formula at cell midpoints t0 + (i + 1/2)*dt over [t0, t0 + span], so
 * indicator examples are reproduced exactly whenever their jump points lie on
 * the cell-boundary lattice (pick dt dividing 1 for the square-bump trains).
 */
struct GalleryParams {
    double t0 = 0.0;
    double dt = 0.01;
    double span = 100.0;
    Domain domain = Domain::HalfLine;

    double value = 1.0;                  // level for constant / bump trains
    double a = 0.0, b = 1.0;             // bump support
    double rate = 1.0;                   // exponential decay rate
    double width = 0.1;                  // mollifier ramp width, in (0, 1/2)
    std::vector<double> amplitudes{1.0}; // quasi-periodic sum
    std::vector<double> omegas{1.0};
};

/**
 * Named examples:
 *   "zero"                   0
 *   "constant"               value
 *   "bump"                   value on [a, b], 0 elsewhere
 *   "chi_squares"            unit bumps on [n^2, n^2 + 1], n = 0, 1, 2, ...
 *   "mollified_chi_squares"  same support, C-infinity ramps of given width
 *   "quasi_periodic"         sum_k amplitudes[k] * sin(omegas[k] * t)
 *   "exp_decay"              value * exp(-rate * t)
 * Unknown names raise std::invalid_argument.
 */
GridFunction make_example(const std::string& name, const GalleryParams& params);

} // namespace weylkit
