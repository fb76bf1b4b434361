#pragma once

#include "weylkit/convolution.hpp"
#include "weylkit/grid_function.hpp"
#include "weylkit/pencil.hpp"

#include <vector>

namespace weylkit {

struct SolverOptions {
    double tail_atol = 1e-6; // truncation certificate target for line problems
    double horizon = 0.0;    // explicit convolution memory; 0 derives it from tail_atol
    Exponent e{2.0};         // Stepanov exponent used by the truncation certificate
};

/**
 * Whole-line problem M (D^gamma u) + A u = f with a diagonal pencil and
 * bounded forcing given on the full line.  Nondegenerate slots get the mild
 * solution u_i = R_i * f_i with the subordinated kernel
 *   R_i(t) = (1/m_i) gamma t^{gamma-1} int s W(s) exp(-(a_i/m_i) s t^gamma) ds,
 * degenerate slots reduce to the algebraic constraint u_i = f_i / a_i.
 *
 * Orders must lie in (1/2, 1].  Below 1/2 the kernel tail t^{-1-gamma} is
 * too fat for any single admissible algebraic envelope (the envelope family
 * requires a tail rate above 1 relative to the singularity exponent), so no
 * truncation certificate exists in this framework; the half-line solver
 * below has no such restriction.
 */
struct LineProblem {
    PencilModel model;
    double gamma = 1.0;
    GridFunction f;
};

struct SolveReport {
    GridFunction u;
    double gamma = 0.0;
    double horizon = 0.0;    // convolution memory actually used
    double tail_bound = 0.0; // certified bound on the dropped memory tail
    double envelope_M = 0.0; // validated envelope constant for the kernel slots
};

SolveReport solve_line(const LineProblem& prob, double t_begin, double t_end,
                       const SolverOptions& opt = {});

/**
 * Half-line Caputo problem M (D^gamma u) + A u = f, u(0) = x0, with f
 * sampled from t = 0.  Nondegenerate slots solve
 *   u_i(t) = S_i(t) x0_i + int_0^t R_i(s) f_i(t - s) ds,
 * with S_i the subordinated relaxation function; degenerate slots carry the
 * constraint u_i = f_i / a_i, and their x0 entries must match it at t = 0
 * (std::invalid_argument otherwise).  Orders cover all of (0, 1]: the
 * convolution is finite, so no decay certificate is needed.  Output lives
 * on the cell-boundary lattice of f starting at 0; degenerate components
 * take the value of the cell to the right of each boundary.
 */
struct IVProblem {
    PencilModel model;
    double gamma = 1.0;
    GridFunction f;
    std::vector<double> x0;
};

struct IVPReport {
    GridFunction u;
    double gamma = 0.0;
    double x0_consistency = 0.0; // worst degenerate-slot mismatch accepted
};

IVPReport solve_ivp(const IVProblem& prob);

} // namespace weylkit
