#include "weylkit/verify.hpp"

#include <algorithm>
#include <cmath>

namespace weylkit {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::HypothesisNotMet: return "hypothesis_not_met";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

TransferReport verify_transfer(const GridFunction& g, const ConvolutionJob& job,
                               const TranslationSearch& ts, const SeminormParams& sp,
                               double t_begin, double t_end) {
    TransferReport rep;
    rep.eps = ts.eps;
    rep.adm = check_admissible(job.kernel, job.e);
    if (!rep.adm.pass) {
        rep.verdict = Verdict::HypothesisNotMet;
        return rep;
    }
    rep.input_unit_norm = stepanov_norm(g, job.e, 1.0);
    rep.search = find_translation_numbers(g, job.e, ts, sp);

    ConvResult conv = infinite_conv(g, job, t_begin, t_end);
    rep.horizon = conv.horizon;
    rep.tail_bound = conv.tail_bound;
    const GridFunction& G = conv.values;

    const double slack = 2.0 * rep.tail_bound;
    const double bound = rep.adm.constant * ts.eps + slack + 1e-12;
    bool all_within = true;
    for (const TranslationRecord& r : rep.search.accepted) {
        TransferRow row;
        row.tau = r.tau;
        row.input_defect = r.defect;
        row.output_defect = translation_defect(G, job.e, r.tau, ts.mode, sp);
        row.bound = bound;
        row.within = row.output_defect <= bound;
        all_within = all_within && row.within;
        rep.max_output_defect = std::max(rep.max_output_defect, row.output_defect);
        rep.rows.push_back(row);
    }

    rep.output_sup = G.sup_norm();
    rep.bounded_bound = rep.adm.constant * rep.input_unit_norm + rep.tail_bound;
    rep.bounded_ok = rep.output_sup <= rep.bounded_bound + 1e-12;
    for (std::size_t i = 0; i + 1 < G.size(); ++i)
        rep.max_step_jump = std::max(
            rep.max_step_jump, std::abs(G.norm_at(i + 1) - G.norm_at(i)));

    if (rep.rows.empty())
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = all_within ? Verdict::Pass : Verdict::Fail;
    return rep;
}

SplitVerifyReport verify_split(const GridFunction& g, const GridFunction& q,
                               const ConvolutionJob& job, const VanishingParams& vp,
                               double t_begin, double t_end, VanishClass target,
                               double identity_tol) {
    SplitVerifyReport rep;
    rep.identity_tol = identity_tol;

    SplitParts parts = split_decomposition(g, q, job, t_begin, t_end);
    rep.horizon = parts.horizon;
    rep.tail_bound = parts.tail_bound;

    double err = 0.0;
    const GridFunction sum = parts.G + parts.F;
    for (std::size_t i = 0; i < sum.size(); ++i)
        for (std::size_t c = 0; c < sum.dim(); ++c)
            err = std::max(err, std::abs(parts.H.value(i, c) - sum.value(i, c)));
    rep.identity_max_err = err;

    rep.q_report = classify_vanishing(q, job.e, vp);
    rep.f_report = classify_vanishing(parts.F, job.e, vp);
    rep.target = target == VanishClass::None ? rep.q_report.verdict : target;

    if (rep.q_report.verdict == VanishClass::None) {
        rep.verdict = Verdict::Inconclusive; // premise on q not established
        return rep;
    }
    const bool identity_ok = rep.identity_max_err <= identity_tol;
    const bool class_ok =
        static_cast<int>(rep.f_report.verdict) >= static_cast<int>(rep.target);
    rep.verdict = identity_ok && class_ok ? Verdict::Pass : Verdict::Fail;
    return rep;
}

} // namespace weylkit
