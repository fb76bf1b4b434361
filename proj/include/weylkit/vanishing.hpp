#pragma once

#include "weylkit/exponent.hpp"
#include "weylkit/grid_function.hpp"
#include "weylkit/seminorms.hpp"

#include <string>
#include <vector>

namespace weylkit {

// Ordered weakest to strongest; None means no class test passed.
enum class VanishClass { None, Weyl, EquiWeyl, Stepanov, C0 };

std::string to_string(VanishClass c);

struct VanishingParams {
    std::vector<double> horizons{100.0, 1000.0, 10000.0}; // t values for the tail limits
    SeminormParams sp;                                    // window schedule + tolerances
};

/**
 * Classification data for a decaying half-line function q.
 *
 * The core quantity is s(t, l) = sup_{x >= t} [ (1/l) int_x^{x+l} |q|^p ]^{1/p},
 * tabulated over the horizon and length schedules.  The four class limits:
 *   c0:       lim_t sup_{s >= t} |q(s)|
 *   stepanov: lim_t s(t, 1)
 *   equi:     lim_l lim_t s(t, l)   (inner limit over t first)
 *   weyl:     lim_t lim_l s(t, l)
 * Each limit is Aitken-estimated from its schedule.  A limit passes when it
 * stays below atol + rtol * s_tl[0][0].  Because the classes nest (uniform
 * decay implies Stepanov decay implies equi-Weyl implies Weyl), a stronger
 * pass closes over the weaker flags; the raw limit estimates are kept so the
 * unclosed numbers remain visible.  The verdict is the strongest passing
 * class.
 */
struct VanishingReport {
    VanishClass verdict = VanishClass::None;

    std::vector<double> horizons;
    std::vector<double> l_values;
    std::vector<std::vector<double>> s_tl; // s_tl[t_index][l_index]
    std::vector<double> sup_tail;          // sup norm beyond each horizon
    std::vector<double> s_t1;              // s(t, 1) per horizon

    double c0_limit = 0.0;
    double stepanov_limit = 0.0;
    double equi_limit = 0.0;
    double weyl_limit = 0.0;
    double threshold = 0.0;

    bool c0_pass = false;
    bool stepanov_pass = false;
    bool equi_pass = false;
    bool weyl_pass = false;
};

VanishingReport classify_vanishing(const GridFunction& q, const Exponent& e,
                                   const VanishingParams& vp);

} // namespace weylkit
