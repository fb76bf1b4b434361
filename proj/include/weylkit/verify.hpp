#pragma once

#include "weylkit/admissibility.hpp"
#include "weylkit/convolution.hpp"
#include "weylkit/seminorms.hpp"
#include "weylkit/translation.hpp"
#include "weylkit/vanishing.hpp"

#include <string>
#include <vector>

namespace weylkit {

enum class Verdict { Pass, Fail, HypothesisNotMet, Inconclusive };
std::string to_string(Verdict v);

/**
 * End-to-end check that almost-periodicity transfers through the
 * convolution: every accepted eps-translation number of the input must be a
 * (C*eps)-translation number of the output, C the admissibility constant.
 * Each row records one accepted shift with both defects and the bound used
 * (C*eps plus twice the truncation bound, since truncation perturbs the
 * output itself).  HypothesisNotMet is reported when the kernel/exponent
 * pair fails admissibility; Inconclusive when no shift was accepted, so
 * there is nothing to transfer.
 */
struct TransferRow {
    double tau = 0.0;
    double input_defect = 0.0;
    double output_defect = 0.0;
    double bound = 0.0;
    bool within = false;
};

struct TransferReport {
    Verdict verdict = Verdict::Inconclusive;
    AdmissibilityReport adm;
    TranslationReport search;
    double eps = 0.0;
    double input_unit_norm = 0.0; // unit-window Stepanov norm of the input
    double horizon = 0.0;
    double tail_bound = 0.0;
    std::vector<TransferRow> rows;
    double max_output_defect = 0.0;
    double output_sup = 0.0;     // sup |G|, against the boundedness estimate
    double bounded_bound = 0.0;  // C * unit-window norm + truncation slack
    bool bounded_ok = false;
    double max_step_jump = 0.0;  // max |G(t+dt) - G(t)|, a continuity diagnostic
};

TransferReport verify_transfer(const GridFunction& g, const ConvolutionJob& job,
                               const TranslationSearch& ts, const SeminormParams& sp,
                               double t_begin, double t_end);

/**
 * Check of the perturbation split H = G + F: the identity must hold to
 * identity_tol on the whole window, and the correction F must land in the
 * requested vanishing class (defaulting to the class measured for q).
 * Inconclusive when q itself fails to vanish in any class.
 */
struct SplitVerifyReport {
    Verdict verdict = Verdict::Inconclusive;
    double identity_max_err = 0.0;
    double identity_tol = 0.0;
    double horizon = 0.0;
    double tail_bound = 0.0;
    VanishClass target = VanishClass::None;
    VanishingReport q_report;
    VanishingReport f_report;
};

SplitVerifyReport verify_split(const GridFunction& g, const GridFunction& q,
                               const ConvolutionJob& job, const VanishingParams& vp,
                               double t_begin, double t_end,
                               VanishClass target = VanishClass::None,
                               double identity_tol = 1e-6);

} // namespace weylkit
