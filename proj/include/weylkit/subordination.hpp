#pragma once

#include "weylkit/special.hpp"

#include <cstddef>

namespace weylkit {

/**
 * Scalar solution pair obtained by subordinating the decaying semigroup
 * exp(-rate * t) to an order in (0, 1):
 *
 *   S(t) = int_0^inf W(s) exp(-rate s t^gamma) ds
 *   R(t) = gamma t^{gamma-1} int_0^inf s W(s) exp(-rate s t^gamma) ds
 *
 * with W the Wright density of that order.  S solves the relaxation problem
 * with S(0) = 1; R is its integrable kernel companion, singular like
 * t^{gamma-1} at the origin and decaying like t^{-1-gamma} at infinity.
 * Both reduce to Mittag-Leffler functions, which the tests use as an
 * independent oracle; the evaluators here never call them.
 */
class SubordinatedFamily {
public:
    SubordinatedFamily(double gamma, double rate);

    double order() const { return gamma_; }
    double rate() const { return rate_; }
    const WrightFunction& wright() const { return wright_; }

    double S(double t) const; // t >= 0
    double R(double t) const; // t > 0

private:
    WrightFunction wright_;
    double gamma_;
    double rate_;
};

/**
 * Empirical check of the two-sided power bounds for R: samples a log grid,
 * reports the weighted sups
 *   M1 = sup_{t<=1} t^{1-gamma*beta} R(t),   M2 = sup_{t>=1} t^{1+gamma} R(t),
 * log-log slope fits of R itself on the extreme half of each region
 * (expected gamma*beta - 1 and -1 - gamma), and slopes of the weighted
 * profiles there.  bounded_small / bounded_large flag the absence of any
 * residual growth trend toward the respective end of the grid.
 */
struct FamilyEstimateReport {
    double gamma = 0.0;
    double rate = 0.0;
    double beta_base = 1.0;
    std::size_t n_samples = 0;
    double M1 = 0.0;
    double M2 = 0.0;
    double limit_small = 0.0; // weighted value at the smallest t sampled
    double limit_large = 0.0; // weighted value at the largest t sampled
    double slope_small = 0.0;
    double slope_large = 0.0;
    double wslope_small = 0.0;
    double wslope_large = 0.0;
    bool bounded_small = false;
    bool bounded_large = false;
};

FamilyEstimateReport verify_family_estimates(double gamma, double rate, double beta_base = 1.0,
                                             double t_min = 1e-4, double t_max = 1e4,
                                             std::size_t n_per_decade = 8);

} // namespace weylkit
