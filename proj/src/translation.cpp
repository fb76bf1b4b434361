#include "weylkit/translation.hpp"

#include "weylkit/detail/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylkit {

namespace {

struct ShiftWorkspace {
    std::vector<double> d;      // |f(.+tau) - f|^p per cell
    std::vector<double> prefix;
};

// Builds the pointwise p-power profile for a shift of k >= 0 cells.
void build_shift_profile(const GridFunction& f, std::size_t k, double p, ShiftWorkspace& ws) {
    const std::size_t n = f.size(), dim = f.dim();
    const std::size_t r = n - k;
    ws.d.resize(r);
    if (dim == 1) {
        const double* a = f.values().data();
        for (std::size_t i = 0; i < r; ++i) ws.d[i] = detail::pow_p(a[i + k] - a[i], p);
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                double v = f.value(i + k, c) - f.value(i, c);
                s += v * v;
            }
            ws.d[i] = detail::pow_p(std::sqrt(s), p);
        }
    }
    detail::build_prefix(ws.d, ws.prefix);
}

std::size_t snap_cells(double l, double dt) {
    auto m = std::llround(l / dt);
    return static_cast<std::size_t>(std::max<long long>(1, m));
}

double defect_from_profile(const ShiftWorkspace& ws, const Exponent& e, double dt, APMode mode,
                           const SeminormParams& sp) {
    const std::size_t r = ws.d.size();
    std::vector<double> per_l;
    for (double l : sp.l_schedule) {
        const std::size_t m = snap_cells(l, dt);
        if (m > r)
            throw std::invalid_argument(
                "translation defect: span cannot accommodate the shifted window");
        if (mode == APMode::EquiWeyl && l != sp.l_schedule.back()) continue;
        detail::WindowMax best = detail::max_window_sum(ws.prefix, m, 0, r - m);
        per_l.push_back(detail::root_p(best.sum / static_cast<double>(m), e.p()));
    }
    if (mode == APMode::EquiWeyl) return per_l.back();
    return extrapolate_limit(per_l, sp.atol, sp.rtol).limit;
}

} // namespace

double translation_defect(const GridFunction& f, const Exponent& e, double tau, APMode mode,
                          const SeminormParams& sp) {
    if (sp.l_schedule.empty())
        throw std::invalid_argument("translation defect: empty length schedule");
    auto k = std::llround(tau / f.dt());
    auto ka = static_cast<std::size_t>(std::llabs(k));
    if (ka >= f.size())
        throw std::invalid_argument("translation defect: shift exceeds the sampled span");
    ShiftWorkspace ws;
    // A negative shift has the same defect as its mirror image.
    build_shift_profile(f, ka, e.p(), ws);
    return defect_from_profile(ws, e, f.dt(), mode, sp);
}

TranslationReport find_translation_numbers(const GridFunction& f, const Exponent& e,
                                           const TranslationSearch& ts,
                                           const SeminormParams& sp) {
    if (!(ts.step > 0.0)) throw std::invalid_argument("translation search: step must be positive");
    if (!(ts.end > ts.start))
        throw std::invalid_argument("translation search: empty candidate interval");
    if (!(ts.eps > 0.0)) throw std::invalid_argument("translation search: eps must be positive");
    if (!(ts.density_length > 0.0) || ts.step > ts.density_length + 1e-12)
        throw std::invalid_argument(
            "translation search: step must not exceed the density length");
    if (sp.l_schedule.empty())
        throw std::invalid_argument("translation search: empty length schedule");

    const double dt = f.dt();
    const std::size_t n = f.size();
    const std::size_t m_max = snap_cells(sp.l_schedule.back(), dt);
    // Fail early if even the largest shift cannot host one window.
    auto k_end = static_cast<std::size_t>(std::llabs(std::llround(ts.end / dt)));
    if (k_end >= n || n - k_end < m_max)
        throw std::invalid_argument(
            "translation search: span cannot accommodate shifted windows at the interval end");

    TranslationReport rep;
    rep.mode = ts.mode;
    rep.defect_length = static_cast<double>(m_max) * dt;

    ShiftWorkspace ws;
    long long prev_k = -1;
    bool have_prev = false;
    const auto njobs = static_cast<std::size_t>(std::floor((ts.end - ts.start) / ts.step)) + 1;
    for (std::size_t j = 0; j < njobs; ++j) {
        const double tau_req = ts.start + static_cast<double>(j) * ts.step;
        const long long k = std::llround(tau_req / dt);
        if (have_prev && k == prev_k) continue;
        prev_k = k;
        have_prev = true;
        ++rep.candidates;
        const auto ka = static_cast<std::size_t>(std::llabs(k));
        build_shift_profile(f, ka, e.p(), ws);
        const double defect = defect_from_profile(ws, e, dt, ts.mode, sp);
        if (defect <= ts.eps)
            rep.accepted.push_back({static_cast<double>(k) * dt, defect});
    }

    double prev = ts.start, gap = 0.0;
    for (const TranslationRecord& r : rep.accepted) {
        gap = std::max(gap, r.tau - prev);
        prev = r.tau;
    }
    gap = std::max(gap, ts.end - prev);
    rep.largest_gap = gap;
    rep.relatively_dense = !rep.accepted.empty() && gap <= ts.density_length + 1e-9;
    return rep;
}

} // namespace weylkit
