#include "weylkit/json_report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace weylkit {

namespace {

ordered_json fin(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

ordered_json fin(const std::vector<double>& xs) {
    ordered_json a = ordered_json::array();
    for (double x : xs) a.push_back(fin(x));
    return a;
}

const char* mode_name(APMode m) { return m == APMode::EquiWeyl ? "equi-weyl" : "weyl"; }

} // namespace

ordered_json grid_summary(const GridFunction& g) {
    ordered_json j;
    j["t0"] = fin(g.t0());
    j["dt"] = fin(g.dt());
    j["samples"] = g.size();
    j["dim"] = g.dim();
    j["domain"] = g.domain() == Domain::HalfLine ? "half-line" : "full-line";
    j["sup_norm"] = fin(g.sup_norm());
    return j;
}

ordered_json to_json(const EnvelopeLaw& env) {
    ordered_json j;
    j["kind"] = env.kind == DecayKind::Exponential ? "exponential" : "algebraic";
    j["M"] = fin(env.M);
    j["beta"] = fin(env.beta);
    if (env.kind == DecayKind::Exponential)
        j["c"] = fin(env.c);
    else
        j["gamma"] = fin(env.gamma);
    return j;
}

ordered_json to_json(const WeylReport& r) {
    ordered_json j;
    j["l_values"] = fin(r.l_values);
    j["per_l"] = fin(r.per_l);
    j["achieved_x"] = fin(r.achieved_x);
    j["limit"] = fin(r.limit);
    j["uncertainty"] = fin(r.uncertainty);
    j["converged"] = r.converged;
    return j;
}

ordered_json to_json(const TranslationReport& r) {
    ordered_json j;
    j["mode"] = mode_name(r.mode);
    j["candidates"] = r.candidates;
    j["defect_length"] = fin(r.defect_length);
    ordered_json acc = ordered_json::array();
    for (const TranslationRecord& rec : r.accepted) {
        ordered_json e;
        e["tau"] = fin(rec.tau);
        e["defect"] = fin(rec.defect);
        acc.push_back(std::move(e));
    }
    j["accepted"] = std::move(acc);
    j["largest_gap"] = fin(r.largest_gap);
    j["relatively_dense"] = r.relatively_dense;
    return j;
}

ordered_json to_json(const VanishingReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["horizons"] = fin(r.horizons);
    j["l_values"] = fin(r.l_values);
    ordered_json stl = ordered_json::array();
    for (const auto& row : r.s_tl) stl.push_back(fin(row));
    j["s_tl"] = std::move(stl);
    j["sup_tail"] = fin(r.sup_tail);
    j["s_t1"] = fin(r.s_t1);
    j["c0_limit"] = fin(r.c0_limit);
    j["stepanov_limit"] = fin(r.stepanov_limit);
    j["equi_limit"] = fin(r.equi_limit);
    j["weyl_limit"] = fin(r.weyl_limit);
    j["threshold"] = fin(r.threshold);
    j["c0_pass"] = r.c0_pass;
    j["stepanov_pass"] = r.stepanov_pass;
    j["equi_pass"] = r.equi_pass;
    j["weyl_pass"] = r.weyl_pass;
    return j;
}

ordered_json to_json(const AdmissibilityReport& r) {
    ordered_json j;
    j["p"] = fin(r.p);
    j["q"] = fin(r.q);
    j["pass"] = r.pass;
    j["reason"] = r.reason;
    j["zeta_lo"] = fin(r.zeta_lo);
    j["zeta_hi"] = fin(r.zeta_hi);
    j["zeta"] = fin(r.zeta);
    j["weight_norm"] = fin(r.weight_norm);
    j["shift_integral"] = fin(r.shift_integral);
    j["constant"] = fin(r.constant);
    j["kernel_l1"] = fin(r.kernel_l1);
    return j;
}

ordered_json to_json(const DominationReport& r) {
    ordered_json j;
    j["t"] = fin(r.t);
    j["Q"] = fin(r.Q);
    j["Bp"] = fin(r.Bp);
    j["dominated"] = r.dominated;
    j["violations"] = r.violations;
    j["max_excess"] = fin(r.max_excess);
    return j;
}

ordered_json to_json(const TransferReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["admissibility"] = to_json(r.adm);
    j["search"] = to_json(r.search);
    j["eps"] = fin(r.eps);
    j["input_unit_norm"] = fin(r.input_unit_norm);
    j["horizon"] = fin(r.horizon);
    j["tail_bound"] = fin(r.tail_bound);
    ordered_json rows = ordered_json::array();
    for (const TransferRow& row : r.rows) {
        ordered_json e;
        e["tau"] = fin(row.tau);
        e["input_defect"] = fin(row.input_defect);
        e["output_defect"] = fin(row.output_defect);
        e["bound"] = fin(row.bound);
        e["within"] = row.within;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["max_output_defect"] = fin(r.max_output_defect);
    j["output_sup"] = fin(r.output_sup);
    j["bounded_bound"] = fin(r.bounded_bound);
    j["bounded_ok"] = r.bounded_ok;
    j["max_step_jump"] = fin(r.max_step_jump);
    return j;
}

ordered_json to_json(const SplitVerifyReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["identity_max_err"] = fin(r.identity_max_err);
    j["identity_tol"] = fin(r.identity_tol);
    j["horizon"] = fin(r.horizon);
    j["tail_bound"] = fin(r.tail_bound);
    j["target"] = to_string(r.target);
    j["q_report"] = to_json(r.q_report);
    j["f_report"] = to_json(r.f_report);
    return j;
}

ordered_json to_json(const FamilyEstimateReport& r) {
    ordered_json j;
    j["gamma"] = fin(r.gamma);
    j["rate"] = fin(r.rate);
    j["beta_base"] = fin(r.beta_base);
    j["n_samples"] = r.n_samples;
    j["M1"] = fin(r.M1);
    j["M2"] = fin(r.M2);
    j["limit_small"] = fin(r.limit_small);
    j["limit_large"] = fin(r.limit_large);
    j["slope_small"] = fin(r.slope_small);
    j["slope_large"] = fin(r.slope_large);
    j["wslope_small"] = fin(r.wslope_small);
    j["wslope_large"] = fin(r.wslope_large);
    j["bounded_small"] = r.bounded_small;
    j["bounded_large"] = r.bounded_large;
    return j;
}

ordered_json to_json(const ConditionPReport& r) {
    ordered_json j;
    j["c"] = fin(r.c);
    j["n_samples"] = r.n_samples;
    j["pole_free"] = r.pole_free;
    j["min_denom"] = fin(r.min_denom);
    j["beta_fit"] = fin(r.beta_fit);
    j["M_fit"] = fin(r.M_fit);
    j["beta_weighted"] = fin(r.beta_weighted);
    j["M_weighted"] = fin(r.M_weighted);
    return j;
}

ordered_json to_json(const SolveReport& r) {
    ordered_json j;
    j["gamma"] = fin(r.gamma);
    j["horizon"] = fin(r.horizon);
    j["tail_bound"] = fin(r.tail_bound);
    j["envelope_M"] = fin(r.envelope_M);
    j["u"] = grid_summary(r.u);
    return j;
}

ordered_json to_json(const IVPReport& r) {
    ordered_json j;
    j["gamma"] = fin(r.gamma);
    j["x0_consistency"] = fin(r.x0_consistency);
    j["u"] = grid_summary(r.u);
    return j;
}

ordered_json to_json(const FracDerivResult& r) {
    ordered_json j;
    j["tail_bound"] = fin(r.tail_bound);
    j["history_sup"] = fin(r.history_sup);
    j["values"] = grid_summary(r.values);
    return j;
}

void write_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_json: cannot open " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write_json: write failed for " + path);
}

} // namespace weylkit
