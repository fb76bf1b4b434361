#pragma once

#include "weylkit/exponent.hpp"
#include "weylkit/grid_function.hpp"
#include "weylkit/kernel_spec.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace weylkit {

/**
 * Two-piece decay bound for the finite convolution Q(t) = int_0^t R q(t-s) ds
 * against an algebraic envelope M t^(beta-1)/(1+t^gamma), split at a cut
 * a(t) that grows to infinity slower than t:
 *
 *   p > 1:  B_p(t) = M [ a^(1/q) (t-a)^(beta-1-gamma) (int_0^a |q|^p)^(1/p)
 *                      + (t-a)^(beta-1-gamma+1/q) (int_a^t |q|^p)^(1/p) ]
 *   p = 1:  B_1(t) = M [ (t-a)^(beta-1-gamma) int_0^a |q|
 *                      + sup_{[0,t-a]} envelope/M * int_a^t |q| ]
 *
 * with a = a(t).  The report records Q and B_p at the probe times together
 * with every probe where Q exceeds the bound; domination failing is a
 * finding, not an error.
 */
struct DominationReport {
    std::vector<double> t;
    std::vector<double> Q;
    std::vector<double> Bp;
    bool dominated = false;
    std::vector<std::size_t> violations; // probe indices with Q > Bp + tol
    double max_excess = 0.0;             // max over probes of Q - Bp
};

DominationReport bound_profile(const GridFunction& q, const KernelSpec& k, const Exponent& e,
                               const std::function<double(double)>& a_of_t,
                               const std::vector<double>& probes, double tol = 1e-9);

} // namespace weylkit
