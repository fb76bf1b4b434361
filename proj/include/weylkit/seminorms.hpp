#pragma once

#include "weylkit/exponent.hpp"
#include "weylkit/grid_function.hpp"

#include <cstddef>
#include <vector>

namespace weylkit {

/**
 * Length schedule and tolerances shared by the averaged-seminorm routines.
 * Window lengths are snapped to whole cells (l_eff = round(l/dt)*dt); the
 * schedule must be strictly increasing.  atol/rtol control both limit
 * extrapolation convergence checks and downstream verdict thresholds.
 */
struct SeminormParams {
    std::vector<double> l_schedule{10.0, 100.0, 1000.0};
    double atol = 1e-3;
    double rtol = 1e-2;
};

struct SupResult {
    double value = 0.0;
    double x = 0.0; // window start achieving the sup
};

/**
 * Windowed p-mean distance
 *   sup_x [ (1/l) * integral_x^{x+l} |f - g|^p ]^{1/p}
 * with the sup ranging over every window start representable inside the
 * common span.  f and g must share their grid exactly.  l is snapped to a
 * whole number of cells; a span too short for one window is a range error.
 */
SupResult stepanov_metric_at(const GridFunction& f, const GridFunction& g, const Exponent& e,
                             double l);
double stepanov_metric(const GridFunction& f, const GridFunction& g, const Exponent& e, double l);

// Same against the zero function; l defaults to the classical unit window.
SupResult stepanov_norm_at(const GridFunction& f, const Exponent& e, double l = 1.0);
double stepanov_norm(const GridFunction& f, const Exponent& e, double l = 1.0);

/**
 * Limit of the windowed seminorm along the length schedule.  The limit is
 * estimated from the last three schedule values by Aitken extrapolation,
 * guarded against vanishing denominators and clamped at zero; uncertainty
 * brackets the extrapolant against the last two raw values.  converged means
 * the tail of the schedule moved by less than atol + rtol*value and did so
 * monotonically.
 */
struct WeylReport {
    std::vector<double> l_values;       // snapped lengths actually used
    std::vector<double> per_l;          // seminorm at each length
    std::vector<double> achieved_x;     // window start achieving each sup
    double limit = 0.0;
    double uncertainty = 0.0;
    bool converged = false;
};

WeylReport weyl_seminorm(const GridFunction& f, const Exponent& e, const SeminormParams& sp);
WeylReport weyl_distance(const GridFunction& f, const GridFunction& g, const Exponent& e,
                         const SeminormParams& sp);

// Aitken delta-squared step on the last three values of a sequence, with the
// guards described on WeylReport.  Exposed for reuse by the classifiers.
struct LimitEstimate {
    double limit = 0.0;
    double uncertainty = 0.0;
    bool converged = false;
};
LimitEstimate extrapolate_limit(const std::vector<double>& values, double atol, double rtol);

} // namespace weylkit
