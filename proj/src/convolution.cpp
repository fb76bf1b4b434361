#include "weylkit/convolution.hpp"

#include "weylkit/quadrature.hpp"
#include "weylkit/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylkit {

namespace {

long long lattice_pos(double t, double anchor, double dt, const char* what) {
    const double u = (t - anchor) / dt;
    const long long p = std::llround(u);
    if (std::abs(u - static_cast<double>(p)) > 1e-6)
        throw std::invalid_argument(std::string(what) +
                                    ": time is not on the cell-boundary lattice");
    return p;
}

// Smallest integer horizon T with tail_sum(env, q, T) * s1 <= atol.
double certified_horizon(const EnvelopeLaw& env, double q, double s1, double atol,
                         double& bound_out) {
    const double scale = std::max(s1, 1e-12);
    const double inner = atol / (10.0 * scale);
    double t = 1.0;
    const double t_max = 4.0e6;
    while (t <= t_max) {
        const double b = tail_sum(env, q, t, inner) * s1;
        if (b <= atol) {
            // Shrink back geometrically for a tighter (still certified) T.
            double lo = t / 2.0, hi = t;
            while (hi - lo > 1.0) {
                const double mid = std::floor(0.5 * (lo + hi));
                if (tail_sum(env, q, mid, inner) * s1 <= atol)
                    hi = mid;
                else
                    lo = mid;
            }
            bound_out = tail_sum(env, q, hi, inner) * s1;
            return hi;
        }
        t *= 2.0;
    }
    throw std::invalid_argument(
        "infinite_conv: truncation certificate unattainable; the input is not "
        "Stepanov-bounded enough for the requested tail tolerance");
}

struct SumPlan {
    std::size_t slots = 1;
    std::size_t dim = 1;
    std::size_t slot_for(std::size_t c) const { return slots > 1 ? c : 0; }
};

SumPlan make_plan(const KernelSpec& k, const GridFunction& g) {
    SumPlan plan;
    plan.slots = k.slots();
    plan.dim = g.dim();
    if (plan.slots > 1 && plan.dim != plan.slots)
        throw std::invalid_argument(
            "convolution: diagonal kernel slot count must match data dimension");
    return plan;
}

} // namespace

MomentTable build_moments(const KernelSpec& k, double dt, std::size_t count) {
    if (!(dt > 0.0)) throw std::invalid_argument("build_moments: dt must be positive");
    if (count == 0) throw std::invalid_argument("build_moments: need at least one cell");
    const EnvelopeLaw& env = k.envelope();
    MomentTable tbl;
    tbl.dt = dt;
    tbl.mu.resize(k.slots());
    for (std::size_t s = 0; s < k.slots(); ++s) {
        auto& mu = tbl.mu[s];
        mu.resize(count);
        auto f = [&](double t) { return k.eval(t, s); };
        if (env.singular_at_zero()) {
            // Peel the t^(beta-1) order out of the first cell.
            auto w = [&](double t) { return f(t) * std::pow(t, 1.0 - env.beta); };
            mu[0] = integrate_power_left(w, env.beta - 1.0, dt, 1e-14, 1e-10).value;
        } else {
            mu[0] = integrate(f, 0.0, dt, 1e-14, 1e-10).value;
        }
        for (std::size_t j = 1; j < count; ++j) {
            const double a = static_cast<double>(j) * dt;
            mu[j] = integrate(f, a, a + dt, 1e-14, 1e-10).value;
        }
    }
    return tbl;
}

ConvResult infinite_conv(const GridFunction& g, const ConvolutionJob& job, double t_begin,
                         double t_end) {
    const SumPlan plan = make_plan(job.kernel, g);
    const double dt = g.dt();
    if (!(t_end >= t_begin)) throw std::invalid_argument("infinite_conv: t_end < t_begin");

    const Exponent& e = job.e;
    const double s1 = stepanov_norm(g, e, 1.0);
    double horizon, bound;
    if (job.horizon > 0.0) {
        horizon = job.horizon;
        bound = tail_sum(job.kernel.envelope(), e.q(), std::max(1.0, std::floor(horizon)),
                         job.tail_atol * 0.1) *
                s1;
    } else {
        horizon = certified_horizon(job.kernel.envelope(), e.q(), s1, job.tail_atol, bound);
    }
    const auto J = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));

    const long long pos_begin = lattice_pos(t_begin, g.cell_start(), dt, "infinite_conv");
    const long long pos_end = lattice_pos(t_end, g.cell_start(), dt, "infinite_conv");
    const auto n = static_cast<long long>(g.size());
    if (pos_begin < static_cast<long long>(J))
        throw std::invalid_argument(
            "infinite_conv: not enough history before t_begin for the truncation horizon");
    if (pos_end > n)
        throw std::invalid_argument("infinite_conv: t_end beyond the sampled span");

    MomentTable tbl = build_moments(job.kernel, dt, J);
    const auto n_out = static_cast<std::size_t>(pos_end - pos_begin) + 1;
    std::vector<double> out(n_out * plan.dim);
    const double* gd = g.values().data();
    for (std::size_t m = 0; m < n_out; ++m) {
        const long long pos = pos_begin + static_cast<long long>(m);
        for (std::size_t c = 0; c < plan.dim; ++c) {
            const std::vector<double>& mu = tbl.mu[plan.slot_for(c)];
            double acc = 0.0;
            if (plan.dim == 1) {
                const double* base = gd + (pos - 1);
                for (std::size_t j = 0; j < J; ++j) acc += mu[j] * base[-static_cast<long long>(j)];
            } else {
                for (std::size_t j = 0; j < J; ++j)
                    acc += mu[j] * g.value(static_cast<std::size_t>(pos) - 1 - j, c);
            }
            out[m * plan.dim + c] = acc;
        }
    }
    Domain dom = t_begin < -1e-9 * dt ? Domain::FullLine : Domain::HalfLine;
    ConvResult r{GridFunction(t_begin, dt, plan.dim, std::move(out), dom),
                 static_cast<double>(J) * dt, bound};
    return r;
}

namespace {

void require_anchored(const GridFunction& h, const char* what) {
    if (std::abs(h.cell_start()) > 1e-9 * h.dt())
        throw std::invalid_argument(std::string(what) +
                                    ": half-line data must have its first cell at t = 0");
}

} // namespace

GridFunction finite_conv(const GridFunction& h, const KernelSpec& kernel) {
    require_anchored(h, "finite_conv");
    const SumPlan plan = make_plan(kernel, h);
    const double dt = h.dt();
    const std::size_t n = h.size();
    MomentTable tbl = build_moments(kernel, dt, n);
    std::vector<double> out((n + 1) * plan.dim, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t c = 0; c < plan.dim; ++c) {
            const std::vector<double>& mu = tbl.mu[plan.slot_for(c)];
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += mu[j] * h.value(m - 1 - j, c);
            out[m * plan.dim + c] = acc;
        }
    }
    return GridFunction(0.0, dt, plan.dim, std::move(out), Domain::HalfLine);
}

std::vector<double> finite_conv_at(const GridFunction& h, const KernelSpec& kernel,
                                   const std::vector<double>& probes) {
    require_anchored(h, "finite_conv_at");
    const SumPlan plan = make_plan(kernel, h);
    if (plan.dim != 1)
        throw std::invalid_argument("finite_conv_at: probe evaluation expects scalar data");
    const double dt = h.dt();
    const auto n = static_cast<long long>(h.size());
    std::size_t max_pos = 0;
    std::vector<std::size_t> pos(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const long long p = lattice_pos(probes[i], 0.0, dt, "finite_conv_at");
        if (p < 0 || p > n)
            throw std::invalid_argument("finite_conv_at: probe outside the sampled span");
        pos[i] = static_cast<std::size_t>(p);
        max_pos = std::max(max_pos, pos[i]);
    }
    MomentTable tbl = build_moments(kernel, dt, std::max<std::size_t>(1, max_pos));
    const std::vector<double>& mu = tbl.mu[0];
    const double* hd = h.values().data();
    std::vector<double> out(probes.size(), 0.0);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < pos[i]; ++j) acc += mu[j] * hd[pos[i] - 1 - j];
        out[i] = acc;
    }
    return out;
}

ConvResult tail_term(const GridFunction& g, const ConvolutionJob& job, double t_begin,
                     double t_end) {
    SplitParts parts = split_decomposition(
        g, GridFunction::zeros(0.5 * g.dt(), g.dt(),
                               std::max<std::size_t>(1, static_cast<std::size_t>(
                                                            std::llround(t_end / g.dt()))),
                               g.dim()),
        job, std::max(0.0, t_begin), t_end);
    return {parts.tail, parts.horizon, parts.tail_bound};
}

SplitParts split_decomposition(const GridFunction& g, const GridFunction& q,
                               const ConvolutionJob& job, double t_begin, double t_end) {
    if (g.dim() != q.dim())
        throw std::invalid_argument("split_decomposition: dimension mismatch");
    if (g.dt() != q.dt()) throw std::invalid_argument("split_decomposition: step mismatch");
    require_anchored(q, "split_decomposition");
    const SumPlan plan = make_plan(job.kernel, g);
    const double dt = g.dt();
    if (t_begin < 0.0)
        throw std::invalid_argument("split_decomposition: output starts on the half line");

    const long long g0 = lattice_pos(0.0, g.cell_start(), dt, "split_decomposition");
    const long long pos_begin = lattice_pos(t_begin, 0.0, dt, "split_decomposition");
    const long long pos_end = lattice_pos(t_end, 0.0, dt, "split_decomposition");
    if (pos_end < pos_begin) throw std::invalid_argument("split_decomposition: empty output");
    if (pos_end > static_cast<long long>(q.size()))
        throw std::invalid_argument("split_decomposition: t_end beyond the span of q");

    const Exponent& e = job.e;
    const double s1 = stepanov_norm(g, e, 1.0);
    double horizon, bound;
    if (job.horizon > 0.0) {
        horizon = job.horizon;
        bound = tail_sum(job.kernel.envelope(), e.q(), std::max(1.0, std::floor(horizon)),
                         job.tail_atol * 0.1) *
                s1;
    } else {
        horizon = certified_horizon(job.kernel.envelope(), e.q(), s1, job.tail_atol, bound);
    }
    // The identity needs the truncated sum to cover every finite-convolution
    // term inside the window, so the horizon never undercuts the output end.
    auto J = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
    J = std::max(J, static_cast<std::size_t>(pos_end));

    if (pos_begin - static_cast<long long>(J) + g0 < 0 ||
        pos_end - 1 + g0 >= static_cast<long long>(g.size()))
        throw std::invalid_argument(
            "split_decomposition: g does not cover the horizon-deep history plus the window");

    MomentTable tbl = build_moments(job.kernel, dt, J);
    const auto n_out = static_cast<std::size_t>(pos_end - pos_begin) + 1;
    const std::size_t dim = plan.dim;
    std::vector<double> Hv(n_out * dim), Gv(n_out * dim), Qv(n_out * dim), Tv(n_out * dim),
        Fv(n_out * dim);
    for (std::size_t m = 0; m < n_out; ++m) {
        const long long pos = pos_begin + static_cast<long long>(m);
        for (std::size_t c = 0; c < dim; ++c) {
            const std::vector<double>& mu = tbl.mu[plan.slot_for(c)];
            double accH = 0.0, accQ = 0.0, accG = 0.0, accT = 0.0;
            for (long long j = 0; j < pos; ++j) {
                const std::size_t qi = static_cast<std::size_t>(pos - 1 - j);
                const std::size_t gi = static_cast<std::size_t>(pos - 1 - j + g0);
                const double gv = g.value(gi, c);
                const double qv = q.value(qi, c);
                accQ += mu[static_cast<std::size_t>(j)] * qv;
                accH += mu[static_cast<std::size_t>(j)] * (gv + qv);
                accG += mu[static_cast<std::size_t>(j)] * gv;
            }
            for (std::size_t j = static_cast<std::size_t>(pos); j < J; ++j) {
                const double gv = g.value(static_cast<std::size_t>(pos - 1 + g0) - j, c);
                accG += mu[j] * gv;
                accT += mu[j] * gv;
            }
            const std::size_t o = m * dim + c;
            Hv[o] = accH;
            Gv[o] = accG;
            Qv[o] = accQ;
            Tv[o] = accT;
            Fv[o] = accQ - accT;
        }
    }
    auto mk = [&](std::vector<double>&& v) {
        return GridFunction(t_begin, dt, dim, std::move(v), Domain::HalfLine);
    };
    return SplitParts{mk(std::move(Hv)), mk(std::move(Gv)), mk(std::move(Qv)),
                      mk(std::move(Tv)), mk(std::move(Fv)),
                      static_cast<double>(J) * dt, bound};
}

} // namespace weylkit
