#pragma once

#include "weylkit/grid_function.hpp"

namespace weylkit {

/**
 * Caputo derivative of order alpha in (0, 1] with base point at the first
 * sample, discretized by the classical L1 scheme on the sample lattice:
 *
 *   (D^a u)(t_n) ~ h^{-a}/Gamma(2-a) * sum_{j<n} w_j (u_{n-j} - u_{n-j-1}),
 *   w_j = (j+1)^{1-a} - j^{1-a}.
 *
 * Output starts at t0 + dt (the scheme has no value at the base point) and
 * is computed componentwise.  alpha = 1 falls back to the exact backward
 * difference the weights degenerate to.
 */
GridFunction caputo_derivative(const GridFunction& u, double alpha);

struct FracDerivResult {
    GridFunction values;
    double tail_bound = 0.0;  // certified bound on the dropped history term
    double history_sup = 0.0; // sup bound assumed for u before the grid
};

/**
 * Marchaud form of the fractional derivative with unbounded memory,
 *
 *   (D^g u)(t) = 1/Gamma(1-g) * int_0^inf (u(t) - u(t-s)) g s^{-1-g} ds,
 *
 * evaluated on the sample lattice for t in [t_begin, t_end].  On each
 * memory cell [j dt, (j+1) dt] the difference u(t) - u(t-s) is replaced by
 * its linear interpolant through the lattice offsets and integrated against
 * the kernel exactly (product-trapezoid rule, O(dt^{2-g}) overall; the
 * vanishing of the difference at s = 0 keeps the first cell regular).
 * Memory stops where the grid does:
 * the u(t) part of the remaining tail is added in closed form, the unknown
 * u(t-s) part is dropped and certified by
 *
 *   tail_bound = max(history_sup, sup|u|) * S^{-g} / Gamma(1-g)
 *
 * with S the memory horizon actually used.  history_sup is the caller's sup
 * bound for u before the first sample.  gamma = 1 degenerates to the
 * ordinary derivative (central difference).  Requires t_begin >= t0 + dt
 * and t_end <= last sample - dt.
 */
FracDerivResult weyl_derivative(const GridFunction& u, double gamma, double t_begin,
                                double t_end, double history_sup);

} // namespace weylkit
