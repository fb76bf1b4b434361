#pragma once

#include "weylkit/admissibility.hpp"
#include "weylkit/exponent.hpp"
#include "weylkit/grid_function.hpp"
#include "weylkit/kernel_spec.hpp"

#include <cstddef>
#include <vector>

namespace weylkit {

/**
 * Per-cell kernel moments mu[slot][j] = int_{j dt}^{(j+1) dt} R_slot(s) ds.
 * The first cell absorbs the t^(beta-1) singularity through a power-weighted
 * panel; later cells are plain adaptive panels.  Every convolution flavour
 * below consumes one shared table, which is what makes the finite/infinite
 * split an identity up to float rounding rather than up to quadrature error.
 */
struct MomentTable {
    double dt = 0.0;
    std::vector<std::vector<double>> mu; // [slot][cell]
    std::size_t cells() const { return mu.empty() ? 0 : mu[0].size(); }
};

MomentTable build_moments(const KernelSpec& k, double dt, std::size_t count);

/**
 * Settings shared by the convolution entry points.  tail_atol is the target
 * for the truncation certificate of the full-line convolution:
 *   dropped tail <= tail_sum(envelope, q, T) * unit-window Stepanov norm of g
 * and T grows until that product drops below tail_atol (or horizon overrides
 * it).  An unreachable certificate is reported as a validation error, which
 * is how unbounded inputs surface.
 */
struct ConvolutionJob {
    KernelSpec kernel;
    Exponent e{2.0};
    double tail_atol = 1e-6;
    double horizon = 0.0; // explicit truncation length; 0 means derive from tail_atol
};

struct ConvResult {
    GridFunction values;
    double horizon = 0.0;    // truncation length actually used
    double tail_bound = 0.0; // certified bound on the dropped tail
};

/**
 * G(t) = int_0^inf R(s) g(t - s) ds on the output grid t_begin..t_end (cell
 * boundaries of g, spacing dt).  g must supply at least horizon's worth of
 * history before t_begin.  Vector data convolves slot-wise when the kernel
 * is diagonal (dims must match), componentwise otherwise.
 */
ConvResult infinite_conv(const GridFunction& g, const ConvolutionJob& job, double t_begin,
                         double t_end);

// H(t) = int_0^t R(s) h(t - s) ds for half-line h, on boundaries 0..cell_end.
GridFunction finite_conv(const GridFunction& h, const KernelSpec& kernel);

// Same but only at selected boundary times (cost n per probe, not n^2).
std::vector<double> finite_conv_at(const GridFunction& h, const KernelSpec& kernel,
                                   const std::vector<double>& probes);

// tail(t) = int_t^inf R(s) g(t - s) ds, the correction term of the split.
ConvResult tail_term(const GridFunction& g, const ConvolutionJob& job, double t_begin,
                     double t_end);

/**
 * Decomposition H = G + F with F = Q - tail for h = g + q: H is the finite
 * convolution of h, Q of q, G the full-line convolution of g, and tail the
 * correction.  All five functions are evaluated on one output grid from one
 * moment table, so max |H - (G + F)| is float rounding only.
 */
struct SplitParts {
    GridFunction H, G, Q, tail, F;
    double horizon = 0.0;
    double tail_bound = 0.0;
};

SplitParts split_decomposition(const GridFunction& g, const GridFunction& q,
                               const ConvolutionJob& job, double t_begin, double t_end);

} // namespace weylkit
