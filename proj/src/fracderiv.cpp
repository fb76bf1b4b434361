#include "weylkit/fracderiv.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weylkit {

GridFunction caputo_derivative(const GridFunction& u, double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("caputo_derivative: order must lie in (0, 1]");
    const std::size_t n = u.size(), d = u.dim();
    if (n < 2) throw std::invalid_argument("caputo_derivative: need at least two samples");
    const double h = u.dt();
    std::vector<double> out((n - 1) * d, 0.0);

    if (alpha == 1.0) {
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0; c < d; ++c)
                out[(i - 1) * d + c] = (u.value(i, c) - u.value(i - 1, c)) / h;
        return {u.t0() + h, h, d, std::move(out), u.domain()};
    }

    const double pref = std::pow(h, -alpha) / std::tgamma(2.0 - alpha);
    std::vector<double> w(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j)
        w[j] = std::pow(static_cast<double>(j + 1), 1.0 - alpha) -
               std::pow(static_cast<double>(j), 1.0 - alpha);
    std::vector<double> diff(n * d, 0.0); // diff[k] = u_k - u_{k-1}, k >= 1
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t c = 0; c < d; ++c)
            diff[k * d + c] = u.value(k, c) - u.value(k - 1, c);

    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            double acc = 0.0;
            for (std::size_t j = 0; j < i; ++j) acc += w[j] * diff[(i - j) * d + c];
            out[(i - 1) * d + c] = pref * acc;
        }
    }
    return {u.t0() + h, h, d, std::move(out), u.domain()};
}

FracDerivResult weyl_derivative(const GridFunction& u, double gamma, double t_begin,
                                double t_end, double history_sup) {
    if (!(gamma > 0.0) || !(gamma <= 1.0))
        throw std::invalid_argument("weyl_derivative: order must lie in (0, 1]");
    if (!(history_sup >= 0.0) || !std::isfinite(history_sup))
        throw std::invalid_argument("weyl_derivative: history_sup must be finite and >= 0");
    if (!(t_end >= t_begin)) throw std::invalid_argument("weyl_derivative: t_end < t_begin");
    const double h = u.dt();
    const std::size_t d = u.dim();
    const std::size_t i_begin = u.index_of(t_begin);
    const std::size_t i_end = u.index_of(t_end);
    if (std::abs(u.t_at(i_begin) - t_begin) > 1e-6 * h ||
        std::abs(u.t_at(i_end) - t_end) > 1e-6 * h)
        throw std::invalid_argument("weyl_derivative: window ends must sit on the sample lattice");
    if (i_begin < 1)
        throw std::invalid_argument("weyl_derivative: need at least one memory cell before t_begin");
    if (i_end + 1 >= u.size())
        throw std::invalid_argument("weyl_derivative: central differences need one sample past t_end");

    const std::size_t n_out = i_end - i_begin + 1;
    std::vector<double> out(n_out * d, 0.0);

    if (gamma == 1.0) {
        for (std::size_t i = i_begin; i <= i_end; ++i)
            for (std::size_t c = 0; c < d; ++c)
                out[(i - i_begin) * d + c] =
                    (u.value(i + 1, c) - u.value(i - 1, c)) / (2.0 * h);
        return {{t_begin, h, d, std::move(out), u.domain()}, 0.0, history_sup};
    }

    const double rg = 1.0 / std::tgamma(1.0 - gamma);
    // Fixed memory depth: the number of cells available at the smallest
    // output time, so the certified horizon S is uniform across the window.
    const std::size_t K = i_begin;
    const double S = static_cast<double>(K) * h;

    // Product-trapezoid weights: on each cell [jh, (j+1)h] the difference
    // phi(s) = u(t) - u(t-s) is replaced by its linear interpolant through
    // the lattice offsets and integrated against gamma s^{-1-gamma} exactly.
    // phi(0) = 0 keeps the first cell finite, and the centroid of the
    // singular weight is honoured, so the error is O(h^{2-gamma}) instead of
    // the O(h^{1-gamma}) of a midpoint-value rule.  c[m] multiplies phi(mh).
    std::vector<double> c(K + 1, 0.0);
    const double g1 = gamma / (1.0 - gamma);
    for (std::size_t j = 0; j < K; ++j) {
        const double sl = static_cast<double>(j) * h, sr = sl + h;
        const double i1 = g1 * (std::pow(sr, 1.0 - gamma) - std::pow(sl, 1.0 - gamma));
        if (j == 0) {
            c[1] += i1 / h;
        } else {
            const double i0 = std::pow(sl, -gamma) - std::pow(sr, -gamma);
            c[j] += (sr * i0 - i1) / h;
            c[j + 1] += (i1 - sl * i0) / h;
        }
    }
    const double tail_coef = std::pow(S, -gamma);

    for (std::size_t i = i_begin; i <= i_end; ++i) {
        for (std::size_t cc = 0; cc < d; ++cc) {
            const double ut = u.value(i, cc);
            double acc = 0.0;
            for (std::size_t m = 1; m <= K; ++m) acc += c[m] * (ut - u.value(i - m, cc));
            acc += ut * tail_coef; // exact u(t) part of the s > S tail
            out[(i - i_begin) * d + cc] = rg * acc;
        }
    }

    FracDerivResult res{{t_begin, h, d, std::move(out), u.domain()},
                        std::max(history_sup, u.sup_norm()) * tail_coef * std::abs(rg),
                        history_sup};
    return res;
}

} // namespace weylkit
