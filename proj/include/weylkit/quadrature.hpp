#pragma once

#include "weylkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace weylkit {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;      // estimated absolute error
    std::size_t evals = 0;
};

namespace detail {
// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
} // namespace detail

// One Gauss-Kronrod 15(7) panel over [a, b].
template <class F>
QuadResult gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = detail::kGK15Nodes[i];
        double fv;
        if (i == 7) {
            fv = f(c);
            resk += detail::kGK15WeightsK[i] * fv;
            resg += detail::kGK15WeightsG[3] * fv;
        } else {
            const double f1 = f(c - h * x), f2 = f(c + h * x);
            fv = f1 + f2;
            resk += detail::kGK15WeightsK[i] * fv;
            if (i % 2 == 1) resg += detail::kGK15WeightsG[i / 2] * fv;
        }
    }
    QuadResult r;
    r.value = resk * h;
    r.error = std::abs((resk - resg) * h);
    r.evals = 15;
    return r;
}

/**
 * Adaptive bisection on [a, b] driven by the GK15 error estimate.  Stops when
 * the accumulated estimate drops below max(atol, rtol*|value|); throws
 * NumericError when the panel budget is exhausted first (accuracy failure).
 */
template <class F>
QuadResult integrate(F&& f, double a, double b, double atol = 1e-12, double rtol = 1e-10,
                     std::size_t max_panels = 4000) {
    struct Panel {
        double a, b, val, err;
    };
    if (!(b > a)) {
        if (b == a) return {};
        throw std::invalid_argument("integrate: requires b >= a");
    }
    std::vector<Panel> panels;
    {
        QuadResult r0 = gk15(f, a, b);
        panels.push_back({a, b, r0.value, r0.error});
    }
    std::size_t evals = 15;
    auto worse = [](const Panel& p, const Panel& q) { return p.err < q.err; };
    std::make_heap(panels.begin(), panels.end(), worse);
    while (true) {
        double total = 0.0, err = 0.0;
        for (const Panel& p : panels) {
            total += p.val;
            err += p.err;
        }
        if (err <= std::max(atol, rtol * std::abs(total))) return {total, err, evals};
        if (panels.size() >= max_panels)
            throw NumericError("integrate: accuracy target not reached within panel budget");
        std::pop_heap(panels.begin(), panels.end(), worse);
        Panel p = panels.back();
        panels.pop_back();
        const double m = 0.5 * (p.a + p.b);
        QuadResult l = gk15(f, p.a, m), r = gk15(f, m, p.b);
        evals += 30;
        panels.push_back({p.a, m, l.value, l.error});
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back({m, p.b, r.value, r.error});
        std::push_heap(panels.begin(), panels.end(), worse);
    }
}

/**
 * Integral of s^sigma * w(s) over (0, b] with sigma > -1 and w smooth and
 * bounded near 0.  The substitution s = u^m with m = ceil(2/(1+sigma)) turns
 * the endpoint singularity into a C^1 integrand, so plain panels converge.
 */
template <class W>
QuadResult integrate_power_left(W&& w, double sigma, double b, double atol = 1e-12,
                                double rtol = 1e-10) {
    if (sigma <= -1.0)
        throw std::invalid_argument("integrate_power_left: exponent must exceed -1");
    if (b <= 0.0) throw std::invalid_argument("integrate_power_left: b must be positive");
    const int m = std::max(1, static_cast<int>(std::ceil(2.0 / (1.0 + sigma))));
    const double md = static_cast<double>(m);
    auto g = [&](double u) {
        const double s = std::pow(u, md);
        if (s == 0.0) return 0.0; // integrand vanishes at u = 0 since m(1+sigma) - 1 >= 1
        return md * std::pow(u, md * (1.0 + sigma) - 1.0) * w(s);
    };
    return integrate(g, 0.0, std::pow(b, 1.0 / md), atol, rtol);
}

/**
 * Integral of f over [a, infinity) for a > 0 when |f(s)| decays like s^-rho
 * with rho > 1.  Substituting s = 1/u maps the tail to a power-weighted
 * integral over (0, 1/a] handled by integrate_power_left.
 */
template <class F>
QuadResult integrate_algebraic_tail(F&& f, double a, double rho, double atol = 1e-12,
                                    double rtol = 1e-10) {
    if (a <= 0.0) throw std::invalid_argument("integrate_algebraic_tail: a must be positive");
    if (rho <= 1.0)
        throw std::invalid_argument("integrate_algebraic_tail: decay rate must exceed 1 "
                                    "(divergent tail)");
    auto w = [&](double u) { return f(1.0 / u) * std::pow(u, -rho); };
    return integrate_power_left(w, rho - 2.0, 1.0 / a, atol, rtol);
}

/**
 * Approximate sup of f over [a, b]: coarse scan on n points, then golden
 * section refinement around the best bracket.  Intended for continuous
 * unimodal-after-scan profiles such as decay-law weight functions.
 */
template <class F>
double sup_on_grid(F&& f, double a, double b, std::size_t n = 512) {
    if (!(b >= a) || n < 3) throw std::invalid_argument("sup_on_grid: bad interval or grid");
    double best = -std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
        double v = f(t);
        if (v > best) {
            best = v;
            bi = i;
        }
    }
    double lo = a + (b - a) * static_cast<double>(bi > 0 ? bi - 1 : 0) / static_cast<double>(n - 1);
    double hi = a + (b - a) * static_cast<double>(std::min(bi + 1, n - 1)) / static_cast<double>(n - 1);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12 * (1.0 + std::abs(hi)); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        }
    }
    return std::max({best, f1, f2});
}

} // namespace weylkit
