#pragma once

#include "weylkit/exponent.hpp"
#include "weylkit/kernel_spec.hpp"

#include <string>

namespace weylkit {

/**
 * Hypothesis check for the windowed-metric transfer estimate: a kernel with
 * envelope M t^(beta-1) * decay and an exponent p admit the estimate when
 *   p > 1 and q(beta - 1) > -1   (q the conjugate), or
 *   p = 1 and beta = 1.
 * Comparisons are strict, so the boundary pair (p = 2, beta = 1/2) fails.
 *
 * When the check passes, a weight exponent zeta is chosen from the open
 * interval (1/p, 1/p + gamma - beta) (algebraic laws; exponential laws allow
 * any zeta > 1/p and the interval is half infinite).  The transfer constant
 *   C = M * I1 * I2^(1/p)
 * combines I1, the L^q norm over (0, infinity) of
 * s^(beta-1) (1 + s^zeta) / (M-normalized decay)  (a sup norm when p = 1),
 * with I2 = int_0^inf (1 + s^zeta)^(-p) ds.
 */
struct AdmissibilityReport {
    double p = 1.0;
    double q = 0.0; // +inf when p = 1
    bool pass = false;
    std::string reason;

    double zeta_lo = 0.0;
    double zeta_hi = 0.0; // +inf for exponential laws
    double zeta = 0.0;    // midpoint selection (zeta_lo + 1 when half infinite)

    double weight_norm = 0.0;    // I1
    double shift_integral = 0.0; // I2
    double constant = 0.0;       // C
    double kernel_l1 = 0.0;      // int_0^inf envelope; finite whenever the check passes
};

AdmissibilityReport check_admissible(const KernelSpec& k, const Exponent& e);

/**
 * L^q norm of the envelope over [a, b] (b may be +inf).  q = +inf uses the
 * envelope's monotone decrease and returns env(a).  Requesting a finite-q
 * norm down to a = 0 when q*(beta-1) <= -1 raises std::invalid_argument:
 * the integral diverges and no number would be honest.
 */
double lq_norm_interval(const EnvelopeLaw& env, double q, double a, double b);

// int_0^inf of the envelope.
double envelope_l1(const EnvelopeLaw& env);

/**
 * sum_{k>=0} || envelope ||_{L^q[t+k, t+k+1]} with a certified cutoff: the
 * dropped remainder is bounded by env(T) + int_T^inf env and the loop stops
 * once that bound falls below atol.  Used for convolution truncation
 * certificates against unit-window Stepanov norms.
 */
double tail_sum(const EnvelopeLaw& env, double q, double t, double atol = 1e-10);

} // namespace weylkit
