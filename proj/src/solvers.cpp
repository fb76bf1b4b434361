#include "weylkit/solvers.hpp"

#include "weylkit/errors.hpp"
#include "weylkit/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>

namespace weylkit {

namespace {

struct SlotSplit {
    std::vector<std::size_t> nd; // nondegenerate model slots, in order
    std::vector<std::size_t> dg;
};

SlotSplit split_slots(const PencilModel& model) {
    SlotSplit s;
    for (std::size_t i = 0; i < model.size(); ++i)
        (model.degenerate(i) ? s.dg : s.nd).push_back(i);
    return s;
}

GridFunction select_components(const GridFunction& f, const std::vector<std::size_t>& idx) {
    std::vector<double> data(f.size() * idx.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t c = 0; c < idx.size(); ++c) data[i * idx.size() + c] = f.value(i, idx[c]);
    return {f.t0(), f.dt(), idx.size(), std::move(data), f.domain()};
}

// Cell whose value applies at boundary time t (ties go right), clamped to
// the last cell at the very end of the span.
std::size_t right_cell(const GridFunction& f, double t) {
    const auto j = static_cast<long long>(std::floor((t - f.cell_start()) / f.dt() + 1e-9));
    if (j < 0) throw std::out_of_range("right_cell: time before the sampled span");
    return std::min(static_cast<std::size_t>(j), f.size() - 1);
}

// Subordinated kernel and relaxation evaluators for the nondegenerate slots.
struct SlotFamilies {
    std::shared_ptr<WrightFunction> wright; // null for gamma = 1
    double gamma = 1.0;
    std::vector<double> lambda, inv_m;

    double S(std::size_t k, double t) const {
        if (t == 0.0) return 1.0;
        if (!wright) return std::exp(-lambda[k] * t);
        return wright->laplace(0.0, lambda[k] * std::pow(t, gamma));
    }
    double R(std::size_t k, double t) const {
        if (!wright) return inv_m[k] * std::exp(-lambda[k] * t);
        return inv_m[k] * gamma * std::pow(t, gamma - 1.0) *
               wright->laplace(1.0, lambda[k] * std::pow(t, gamma));
    }
};

SlotFamilies make_families(const PencilModel& model, const std::vector<std::size_t>& nd,
                           double gamma) {
    SlotFamilies fam;
    fam.gamma = gamma;
    if (gamma < 1.0) fam.wright = std::make_shared<WrightFunction>(gamma);
    for (std::size_t i : nd) {
        fam.lambda.push_back(model.rate(i));
        fam.inv_m.push_back(1.0 / model.m(i));
    }
    return fam;
}

std::vector<std::function<double(double)>> kernel_slots(const SlotFamilies& fam) {
    std::vector<std::function<double(double)>> fns;
    for (std::size_t k = 0; k < fam.lambda.size(); ++k)
        fns.push_back([fam, k](double t) { return fam.R(k, t); });
    return fns;
}

// Grows M until the algebraic law M t^(beta-1)/(1+t^gl) dominates every slot
// kernel on a log grid covering [t_lo, t_hi].
EnvelopeLaw validated_alg_envelope(const SlotFamilies& fam, double beta, double gl,
                                   double M_start, double t_lo, double t_hi) {
    double M = M_start;
    const double l0 = std::log10(t_lo), l1 = std::log10(t_hi);
    const auto n = static_cast<std::size_t>(std::ceil((l1 - l0) * 16.0)) + 1;
    for (int iter = 0; iter < 60; ++iter) {
        const EnvelopeLaw env = EnvelopeLaw::algebraic(M, beta, gl);
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = std::pow(
                10.0, l0 + (l1 - l0) * static_cast<double>(j) / static_cast<double>(n - 1));
            const double e = env.value(t);
            for (std::size_t k = 0; k < fam.lambda.size(); ++k)
                worst = std::max(worst, fam.R(k, t) / e);
        }
        if (worst <= 1.0) return env;
        M *= std::max(1.5, 1.1 * worst);
    }
    throw NumericError("solver envelope: domination check failed to converge");
}

EnvelopeLaw line_envelope(const PencilModel& model, const std::vector<std::size_t>& nd,
                          const SlotFamilies& fam, double gamma) {
    if (gamma == 1.0) {
        double M = 0.0, c = std::numeric_limits<double>::infinity();
        for (std::size_t i : nd) {
            M = std::max(M, 1.0 / model.m(i));
            c = std::min(c, model.rate(i));
        }
        return EnvelopeLaw::exponential(M, c, 1.0);
    }
    // Seed from the exact limits: R_i ~ t^{gamma-1}/(m_i Gamma(gamma)) at 0
    // and ~ (m_i/a_i^2) t^{-1-gamma}/|Gamma(-gamma)| at infinity.
    const double abs_gamma_neg = std::tgamma(1.0 - gamma) / gamma; // |Gamma(-gamma)|
    double seed = 0.0;
    for (std::size_t i : nd) {
        seed = std::max(seed, 1.0 / (model.m(i) * std::tgamma(gamma)));
        seed = std::max(seed, model.m(i) / (model.a(i) * model.a(i) * abs_gamma_neg));
    }
    return validated_alg_envelope(fam, gamma, 2.0 * gamma, 2.0 * seed, 1e-4, 1e4);
}

} // namespace

SolveReport solve_line(const LineProblem& prob, double t_begin, double t_end,
                       const SolverOptions& opt) {
    const PencilModel& model = prob.model;
    const GridFunction& f = prob.f;
    const double gamma = prob.gamma;
    if (!(gamma > 0.5) || !(gamma <= 1.0))
        throw std::invalid_argument(
            "solve_line: order must lie in (1/2, 1]; smaller orders admit no certified "
            "memory truncation here, use the half-line solver");
    if (f.dim() != model.size())
        throw std::invalid_argument("solve_line: forcing dimension must match the pencil");

    const SlotSplit slots = split_slots(model);
    const double dt = f.dt();

    double envelope_M = 0.0, horizon = 0.0, tail_bound = 0.0;
    GridFunction out = GridFunction::zeros(0.0, dt, 1, 1, f.domain());
    if (!slots.nd.empty()) {
        const SlotFamilies fam = make_families(model, slots.nd, gamma);
        const EnvelopeLaw env = line_envelope(model, slots.nd, fam, gamma);
        envelope_M = env.M;
        ConvolutionJob job{KernelSpec::diagonal(kernel_slots(fam), env), opt.e, opt.tail_atol,
                           opt.horizon};
        const GridFunction f_nd = select_components(f, slots.nd);
        ConvResult cr = infinite_conv(f_nd, job, t_begin, t_end);
        horizon = cr.horizon;
        tail_bound = cr.tail_bound;

        std::vector<double> data(cr.values.size() * model.size(), 0.0);
        for (std::size_t i = 0; i < cr.values.size(); ++i)
            for (std::size_t c = 0; c < slots.nd.size(); ++c)
                data[i * model.size() + slots.nd[c]] = cr.values.value(i, c);
        out = GridFunction(cr.values.t0(), dt, model.size(), std::move(data), f.domain());
    } else {
        // Purely algebraic model: output directly on the boundary lattice.
        const auto k0 = static_cast<long long>(std::llround((t_begin - f.cell_start()) / dt));
        const auto k1 = static_cast<long long>(std::llround((t_end - f.cell_start()) / dt));
        if (std::abs(t_begin - (f.cell_start() + static_cast<double>(k0) * dt)) > 1e-6 * dt ||
            std::abs(t_end - (f.cell_start() + static_cast<double>(k1) * dt)) > 1e-6 * dt)
            throw std::invalid_argument("solve_line: window ends must sit on cell boundaries");
        if (k0 < 0 || k1 < k0)
            throw std::invalid_argument("solve_line: bad output window");
        out = GridFunction::zeros(f.cell_start() + static_cast<double>(k0) * dt, dt,
                                  static_cast<std::size_t>(k1 - k0) + 1, model.size(),
                                  f.domain());
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = out.t_at(i);
        for (std::size_t c : slots.dg) out.value(i, c) = f.value(right_cell(f, t), c) / model.a(c);
    }
    return {std::move(out), gamma, horizon, tail_bound, envelope_M};
}

IVPReport solve_ivp(const IVProblem& prob) {
    const PencilModel& model = prob.model;
    const GridFunction& f = prob.f;
    const double gamma = prob.gamma;
    if (!(gamma > 0.0) || !(gamma <= 1.0))
        throw std::invalid_argument("solve_ivp: order must lie in (0, 1]");
    if (f.dim() != model.size())
        throw std::invalid_argument("solve_ivp: forcing dimension must match the pencil");
    if (prob.x0.size() != model.size())
        throw std::invalid_argument("solve_ivp: initial value dimension must match the pencil");
    if (std::abs(f.cell_start()) > 1e-6 * f.dt())
        throw std::invalid_argument("solve_ivp: forcing must start at t = 0");

    const SlotSplit slots = split_slots(model);

    // Degenerate slots have no freedom at t = 0: the constraint fixes them.
    double x0_consistency = 0.0;
    for (std::size_t c : slots.dg) {
        const double target = f.value(0, c) / model.a(c);
        const double miss = std::abs(prob.x0[c] - target);
        if (miss > 1e-6 * (1.0 + std::abs(target)))
            throw std::invalid_argument(
                "solve_ivp: initial value violates the degenerate-slot constraint a*u(0) = f(0)");
        x0_consistency = std::max(x0_consistency, miss);
    }

    const double dt = f.dt();
    GridFunction out = GridFunction::zeros(0.0, dt, f.size() + 1, model.size(), Domain::HalfLine);

    if (!slots.nd.empty()) {
        const SlotFamilies fam = make_families(model, slots.nd, gamma);
        EnvelopeLaw env = EnvelopeLaw::algebraic(1.0, gamma, 2.0);
        if (gamma == 1.0) {
            double M = 0.0, c = std::numeric_limits<double>::infinity();
            for (std::size_t i : slots.nd) {
                M = std::max(M, 1.0 / model.m(i));
                c = std::min(c, model.rate(i));
            }
            env = EnvelopeLaw::exponential(M, c, 1.0);
        } else {
            // The finite convolution only needs domination on the sampled span.
            double seed = 0.0;
            for (std::size_t i : slots.nd)
                seed = std::max(seed, 1.0 / (model.m(i) * std::tgamma(gamma)));
            env = validated_alg_envelope(fam, gamma, 2.0, 2.0 * seed,
                                         std::min(1e-4, 0.1 * dt), f.cell_end());
        }
        const GridFunction h_nd = select_components(f, slots.nd);
        const GridFunction Q = finite_conv(h_nd, KernelSpec::diagonal(kernel_slots(fam), env));
        if (Q.size() != out.size())
            throw NumericError("solve_ivp: unexpected convolution output length");
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double t = out.t_at(i);
            for (std::size_t c = 0; c < slots.nd.size(); ++c)
                out.value(i, slots.nd[c]) =
                    fam.S(c, t) * prob.x0[slots.nd[c]] + Q.value(i, c);
        }
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = out.t_at(i);
        for (std::size_t c : slots.dg) out.value(i, c) = f.value(right_cell(f, t), c) / model.a(c);
    }
    return {std::move(out), gamma, x0_consistency};
}

} // namespace weylkit
