#include "weylkit/seminorms.hpp"

#include "weylkit/detail/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylkit {

namespace {

void require_same_grid(const GridFunction& f, const GridFunction& g) {
    if (f.dim() != g.dim() || f.size() != g.size() || f.dt() != g.dt() || f.t0() != g.t0())
        throw std::invalid_argument("stepanov_metric: f and g must share one grid");
}

// d[i] = ||f_i - g_i||^p (g may be null for the norm case).
std::vector<double> pow_profile(const GridFunction& f, const GridFunction* g, double p) {
    std::vector<double> d(f.size());
    const std::size_t dim = f.dim();
    if (dim == 1) {
        const double* a = f.values().data();
        const double* b = g ? g->values().data() : nullptr;
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = detail::pow_p(b ? a[i] - b[i] : a[i], p);
    } else {
        for (std::size_t i = 0; i < d.size(); ++i) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                double v = g ? f.value(i, c) - g->value(i, c) : f.value(i, c);
                s += v * v;
            }
            d[i] = detail::pow_p(std::sqrt(s), p);
        }
    }
    return d;
}

std::size_t snap_cells(double l, double dt) {
    auto m = static_cast<long long>(std::llround(l / dt));
    if (m < 1) m = 1;
    return static_cast<std::size_t>(m);
}

SupResult windowed_mean_sup(const GridFunction& f, const GridFunction* g, const Exponent& e,
                            double l) {
    if (!(l > 0.0)) throw std::invalid_argument("stepanov_metric: window length must be positive");
    const std::size_t m = snap_cells(l, f.dt());
    if (m > f.size())
        throw std::invalid_argument("stepanov_metric: span too short for the requested window");
    std::vector<double> d = pow_profile(f, g, e.p());
    std::vector<double> prefix;
    detail::build_prefix(d, prefix);
    detail::WindowMax best = detail::max_window_sum(prefix, m, 0, f.size() - m);
    const double l_eff = static_cast<double>(m) * f.dt();
    const double mean = best.sum * f.dt() / l_eff;
    return {detail::root_p(mean, e.p()), f.cell_start() + static_cast<double>(best.start) * f.dt()};
}

WeylReport weyl_over_schedule(const GridFunction& f, const GridFunction* g, const Exponent& e,
                              const SeminormParams& sp) {
    if (sp.l_schedule.empty())
        throw std::invalid_argument("weyl_seminorm: empty length schedule");
    for (std::size_t i = 1; i < sp.l_schedule.size(); ++i)
        if (!(sp.l_schedule[i] > sp.l_schedule[i - 1]))
            throw std::invalid_argument("weyl_seminorm: schedule must increase strictly");
    WeylReport rep;
    std::vector<double> d = pow_profile(f, g, e.p());
    std::vector<double> prefix;
    detail::build_prefix(d, prefix);
    for (double l : sp.l_schedule) {
        const std::size_t m = snap_cells(l, f.dt());
        if (m > f.size())
            throw std::invalid_argument("weyl_seminorm: span too short for schedule length");
        detail::WindowMax best = detail::max_window_sum(prefix, m, 0, f.size() - m);
        const double l_eff = static_cast<double>(m) * f.dt();
        rep.l_values.push_back(l_eff);
        rep.per_l.push_back(detail::root_p(best.sum * f.dt() / l_eff, e.p()));
        rep.achieved_x.push_back(f.cell_start() + static_cast<double>(best.start) * f.dt());
    }
    LimitEstimate est = extrapolate_limit(rep.per_l, sp.atol, sp.rtol);
    rep.limit = est.limit;
    rep.uncertainty = est.uncertainty;
    rep.converged = est.converged;
    return rep;
}

} // namespace

SupResult stepanov_metric_at(const GridFunction& f, const GridFunction& g, const Exponent& e,
                             double l) {
    require_same_grid(f, g);
    return windowed_mean_sup(f, &g, e, l);
}

double stepanov_metric(const GridFunction& f, const GridFunction& g, const Exponent& e, double l) {
    return stepanov_metric_at(f, g, e, l).value;
}

SupResult stepanov_norm_at(const GridFunction& f, const Exponent& e, double l) {
    return windowed_mean_sup(f, nullptr, e, l);
}

double stepanov_norm(const GridFunction& f, const Exponent& e, double l) {
    return stepanov_norm_at(f, e, l).value;
}

WeylReport weyl_seminorm(const GridFunction& f, const Exponent& e, const SeminormParams& sp) {
    return weyl_over_schedule(f, nullptr, e, sp);
}

WeylReport weyl_distance(const GridFunction& f, const GridFunction& g, const Exponent& e,
                         const SeminormParams& sp) {
    require_same_grid(f, g);
    return weyl_over_schedule(f, &g, e, sp);
}

LimitEstimate extrapolate_limit(const std::vector<double>& v, double atol, double rtol) {
    LimitEstimate est;
    if (v.empty()) throw std::invalid_argument("extrapolate_limit: empty sequence");
    const double last = v.back();
    if (v.size() == 1) {
        est.limit = last;
        est.uncertainty = std::abs(last);
        return est;
    }
    const double prev = v[v.size() - 2];
    est.limit = last;
    if (v.size() >= 3) {
        const double a = v[v.size() - 3], b = prev, c = last;
        const double denom = c - 2.0 * b + a;
        // Aitken delta-squared; fall back to the raw value when the second
        // difference is too small to divide by.
        if (std::abs(denom) > 1e-14 * (std::abs(a) + std::abs(b) + std::abs(c)))
            est.limit = c - (c - b) * (c - b) / denom;
        if (est.limit < 0.0) est.limit = 0.0;
    }
    est.uncertainty = std::max(std::abs(est.limit - last), std::abs(est.limit - prev));
    bool close = std::abs(last - prev) <= atol + rtol * std::abs(last);
    bool monotone = true;
    if (v.size() >= 3) {
        const double a = v[v.size() - 3];
        monotone = (a >= prev && prev >= last) || (a <= prev && prev <= last);
    }
    est.converged = close && monotone;
    return est;
}

} // namespace weylkit
