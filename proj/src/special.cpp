#include "weylkit/special.hpp"

#include "weylkit/errors.hpp"
#include "weylkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylkit {

namespace {

long double rgamma_ld(long double x) {
    if (x <= 0.5L) {
        const long double r = nearbyintl(x);
        if (r <= 0.0L && fabsl(x - r) < 1e-18L * (1.0L + fabsl(x))) return 0.0L; // pole
    }
    int sign = 1;
    if (x < 0.0L) {
        const auto k = static_cast<long long>(floorl(-x));
        if (k % 2 == 0) sign = -1; // Gamma alternates sign on (-k-1, -k)
    }
    const long double lg = lgammal(x);
    if (-lg > 11350.0L) return 0.0L; // 1/Gamma underflows
    return static_cast<long double>(sign) * expl(-lg);
}

struct LDSeries {
    long double value = 0.0L;
    long double max_term = 0.0L;
    std::size_t terms = 0;
};

// Kahan-compensated alternating series sum_n p_n * c_n where p recurrence is
// supplied by the caller via lambda; stops on two consecutive negligible
// terms or when the running maximum shows the sum is hopeless.
template <class Coef, class Step>
LDSeries kahan_series(Coef&& coef, Step&& step, std::size_t cap) {
    LDSeries out;
    long double comp = 0.0L;
    long double p = 1.0L;
    long double prev = 1e4000L;
    for (std::size_t n = 0; n < cap; ++n) {
        const long double term = p * coef(n);
        const long double at = fabsl(term);
        out.max_term = std::max(out.max_term, at);
        const long double y = term - comp;
        const long double t = out.value + y;
        comp = (t - out.value) - y;
        out.value = t;
        out.terms = n + 1;
        if (n > 8 && at < 1e-32L * (fabsl(out.value) + 1e-300L) &&
            prev < 1e-32L * (fabsl(out.value) + 1e-300L))
            break;
        if (out.max_term > 1e320L) break; // cancellation beyond saving
        prev = at;
        p = step(p, n);
    }
    return out;
}

double noise_of(const LDSeries& s) {
    // Dominated by the coefficients, not the summation: each reciprocal
    // gamma comes from expl(-lgammal(x)), so its relative error scales with
    // |lgamma| (a few hundred at the largest terms), not with the long
    // double epsilon alone.
    return static_cast<double>(s.max_term) * 4e-17 *
           std::sqrt(static_cast<double>(s.terms) + 1.0);
}

} // namespace

double reciprocal_gamma(double x) { return static_cast<double>(rgamma_ld(x)); }

WrightFunction::WrightFunction(double gamma) : gamma_(gamma) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw std::invalid_argument("WrightFunction: order must lie in (0, 1)");
    sigma_ = 1.0 / (1.0 - gamma);
    b_ = (1.0 - gamma) * std::pow(gamma, gamma / (1.0 - gamma));
    a_ = (gamma - 0.5) / (1.0 - gamma);
    pref_ = 1.0 / std::sqrt(2.0 * M_PI * (1.0 - gamma));
    exact_half_ = std::abs(gamma - 0.5) < 1e-12;

    // Ray angle for the contour branch: need Re e^{i phi} < 0 (decay of the
    // e^sigma factor) and Re e^{i phi gamma} >= 0 (no growth from the
    // -s sigma^gamma term), i.e. pi/2 < phi <= pi/(2 gamma); clamped so the
    // decay rate |cos phi| never collapses entirely.
    phi_ = std::max(0.52 * M_PI, std::min(0.95 * M_PI, 0.48 * M_PI / gamma_));

    if (exact_half_) {
        radius_ = 0.0; // closed form, no series region needed
        contour_max_ = 0.0;
    } else {
        double r = 0.5;
        for (double s = 0.5; s <= 60.0; s += 0.25) {
            const SeriesValue v = series(s);
            if (v.noise > 2e-15) break; // absolute: the cache accuracy target
            r = s;
        }
        radius_ = r;
        double s = radius_;
        while (s < 400.0 && asymptotic(s) > 5e-12) s += 0.25;
        contour_max_ = s; // beyond, values are absolutely negligible anyway
    }

    double s = std::max(radius_, 1.0);
    while (s < 400.0 && asymptotic(s) * std::pow(std::max(1.0, s), 3.0) > 1e-16) s += 0.5;
    s_max_ = s + 0.5;

    build_cache();
}

SeriesValue WrightFunction::series(double s) const {
    if (s < 0.0) throw std::domain_error("WrightFunction: argument must be nonnegative");
    const long double g = gamma_;
    const long double sl = s;
    const LDSeries r = kahan_series(
        [&](std::size_t n) { return rgamma_ld(1.0L - g - g * static_cast<long double>(n)); },
        [&](long double p, std::size_t n) { return p * (-sl) / static_cast<long double>(n + 1); },
        2000);
    return {static_cast<double>(r.value), noise_of(r)};
}

double WrightFunction::asymptotic(double s) const {
    if (s <= 0.0) throw std::domain_error("WrightFunction: asymptotic form needs s > 0");
    return pref_ * std::pow(s / gamma_, a_) * std::exp(-b_ * std::pow(s, sigma_));
}

double WrightFunction::integral_form(double s) const {
    if (s < 0.0) throw std::domain_error("WrightFunction: argument must be nonnegative");
    // Hankel ray contour sigma = r e^{+-i phi}: by symmetry
    //   W(s) = (1/pi) int_0^inf r^{gamma-1} e^X sin(Y + phi gamma) dr,
    //   X + iY = r e^{i phi} - s r^gamma e^{i phi gamma}.
    // Both exponential factors decay by the choice of phi, so the integrand
    // stays O(1) and the cancellation the power series suffers from in the
    // mid range never happens.
    const double cphi = std::cos(phi_), sphi = std::sin(phi_);
    const double cg = std::cos(phi_ * gamma_), sg = std::sin(phi_ * gamma_);
    auto f = [&](double r) {
        const double rg = std::pow(r, gamma_);
        const double x = r * cphi - s * rg * cg;
        const double y = r * sphi - s * rg * sg + phi_ * gamma_;
        return std::exp(x) * std::sin(y);
    };
    const double rmax = 45.0 / (-cphi);
    const double cut = std::min(1.0, rmax);
    QuadResult head = integrate_power_left(f, gamma_ - 1.0, cut, 1e-14, 1e-12);
    double v = head.value;
    if (rmax > cut) {
        auto g = [&](double r) { return std::pow(r, gamma_ - 1.0) * f(r); };
        v += integrate(g, cut, rmax, 1e-14, 1e-12, 8000).value;
    }
    return v / M_PI;
}

double WrightFunction::eval(double s) const {
    if (s < 0.0) throw std::domain_error("WrightFunction: argument must be nonnegative");
    if (exact_half_) {
        return std::exp(-0.25 * s * s) / std::sqrt(M_PI); // exact at order 1/2
    }
    if (s <= radius_) return series(s).value;
    if (s <= contour_max_) return integral_form(s);
    return asymptotic(s);
}

void WrightFunction::build_cache() {
    node_s_.clear();
    node_w_.clear();
    node_f_.clear();
    std::vector<double> edges{0.0, 1e-6};
    while (edges.back() < s_max_) {
        const double s = edges.back();
        // Geometric growth, but never let one panel span more than ~4
        // e-foldings of the stretched-exponential decay, or the 15-point
        // rule cannot resolve the drop (worst for gamma near 1 where the
        // exponent sigma is large).
        double step = 0.6 * s;
        const double rate = b_ * sigma_ * std::pow(std::max(s, 1e-3), sigma_ - 1.0);
        if (rate > 0.0) step = std::min(step, 4.0 / rate);
        edges.push_back(std::min(s + step, s_max_));
    }
    struct Node {
        double s, w;
    };
    std::vector<Node> nodes;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double c = 0.5 * (edges[p] + edges[p + 1]);
        const double h = 0.5 * (edges[p + 1] - edges[p]);
        for (int i = 0; i < 8; ++i) {
            const double x = detail::kGK15Nodes[i];
            const double w = detail::kGK15WeightsK[i] * h;
            if (i == 7) {
                nodes.push_back({c, w});
            } else {
                nodes.push_back({c - h * x, w});
                nodes.push_back({c + h * x, w});
            }
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.s < b.s; });
    node_s_.reserve(nodes.size());
    node_w_.reserve(nodes.size());
    node_f_.reserve(nodes.size());
    for (const Node& n : nodes) {
        node_s_.push_back(n.s);
        node_w_.push_back(n.w);
        node_f_.push_back(eval(n.s));
    }
}

double WrightFunction::laplace(double nu, double p) const {
    if (nu < 0.0) throw std::invalid_argument("WrightFunction::laplace: nu must be >= 0");
    if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument("WrightFunction::laplace: p must be finite and >= 0");
    double acc = 0.0;
    const std::size_t n = node_s_.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double s = node_s_[k];
        if (p * s > 745.0) break; // nodes ascend; the rest underflow
        double sv;
        if (nu == 0.0)
            sv = 1.0;
        else if (nu == 1.0)
            sv = s;
        else if (nu == 2.0)
            sv = s * s;
        else
            sv = std::pow(s, nu);
        acc += node_w_[k] * sv * node_f_[k] * std::exp(-p * s);
    }
    return acc;
}

double WrightFunction::moment_exact(double gamma, double nu) {
    return std::tgamma(nu + 1.0) / std::tgamma(gamma * nu + 1.0);
}

namespace {

MLValue ml_series_branch(double alpha, double beta, double x) {
    const long double xl = x, al = alpha, bl = beta;
    const LDSeries r = kahan_series(
        [&](std::size_t n) { return rgamma_ld(al * static_cast<long double>(n) + bl); },
        [&](long double p, std::size_t) { return p * xl; }, 4000);
    return {static_cast<double>(r.value), noise_of(r)};
}

// Power expansion at x -> -inf with optimal truncation; the error is the
// first omitted nonzero term.  Poles of Gamma(beta - alpha k) simply drop
// that power from the expansion and must not be read as convergence.
MLValue ml_asym_branch(double alpha, double beta, double x) {
    const double z = -x;
    long double acc = 0.0L;
    long double zp = 1.0L;
    double prev = std::numeric_limits<double>::infinity();
    double err = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 400; ++k) {
        zp /= z;
        const double c = reciprocal_gamma(beta - alpha * static_cast<double>(k));
        if (c == 0.0) continue;
        const long double term =
            ((k % 2 == 1) ? 1.0L : -1.0L) * zp * static_cast<long double>(c);
        const double at = std::abs(static_cast<double>(term));
        if (at >= prev) {
            err = prev; // terms started regrowing: stop at the optimal point
            break;
        }
        acc += term;
        prev = at;
        if (at < 1e-35) {
            err = at;
            break;
        }
    }
    if (!std::isfinite(err)) err = prev; // exhausted the cap while still shrinking
    return {static_cast<double>(acc), err};
}

// Branch-cut (spectral) representation for negative arguments, 0<alpha<1:
// collapsing the Hankel contour of E_{alpha,beta}(-z) onto the cut and
// substituting v = r^alpha gives
//   E_{alpha,beta}(-z) = 1/(alpha pi) * int_0^inf exp(-v^(1/alpha))
//        * v^((1-beta)/alpha) * (v sin(pi beta) + z sin(pi (beta-alpha)))
//        / ((v + z cos(pi alpha))^2 + (z sin(pi alpha))^2) dv,
// integrable at 0 while beta < 1 + alpha.  Unlike the two power expansions
// this is uniformly accurate in z, so it owns the mid-range that neither
// series reaches.
MLValue ml_spectral_branch(double alpha, double beta, double x) {
    const double z = -x;
    const double sb = std::sin(M_PI * beta);
    const double sba = std::sin(M_PI * (beta - alpha));
    const double ca = std::cos(M_PI * alpha);
    const double sa = std::sin(M_PI * alpha);
    const double p = (1.0 - beta) / alpha;
    auto dens = [&](double v) {
        const double d1 = v + z * ca;
        const double den = d1 * d1 + (z * sa) * (z * sa);
        return std::exp(-std::pow(v, 1.0 / alpha)) * (v * sb + z * sba) / den;
    };
    const double V = std::pow(709.0, alpha); // exp underflow cutoff in v
    const double cut = std::min(1.0, V);
    QuadResult head = integrate_power_left(dens, p, cut, 1e-15, 1e-12);
    double value = head.value, error = head.error;
    if (V > cut) {
        auto f = [&](double v) { return std::pow(v, p) * dens(v); };
        QuadResult tail = integrate(f, cut, V, 1e-15, 1e-12, 4000);
        value += tail.value;
        error += tail.error;
    }
    const double scale = 1.0 / (alpha * M_PI);
    return {scale * value, scale * error + 5e-16 * std::abs(scale * value)};
}

} // namespace

MLValue mittag_leffler_est(double alpha, double beta, double x) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("mittag_leffler: alpha must lie in (0, 1]");
    if (!std::isfinite(beta) || !std::isfinite(x))
        throw std::invalid_argument("mittag_leffler: beta and x must be finite");
    if (alpha == 1.0 && beta == 1.0) return {std::exp(x), std::abs(std::exp(x)) * 1e-15};
    if (alpha == 1.0 && beta == 2.0 && std::abs(x) > 1e-6) {
        const double v = std::expm1(x) / x;
        return {v, std::abs(v) * 1e-14};
    }

    MLValue s = ml_series_branch(alpha, beta, x);
    if (!std::isfinite(s.value) || !std::isfinite(s.error)) {
        // overflow before convergence: worthless, make sure it never wins
        s.value = 0.0;
        s.error = std::numeric_limits<double>::infinity();
    }
    if (s.error <= std::max(1e-15, 1e-11 * std::abs(s.value))) return s;
    MLValue best = s;
    if (x < 0.0) {
        if (alpha < 1.0 - 1e-12 && beta < 1.0 + alpha - 1e-9) {
            try {
                const MLValue sp = ml_spectral_branch(alpha, beta, x);
                if (sp.error < best.error) best = sp;
            } catch (const NumericError&) {
                // quadrature budget exhausted: fall through to the expansion
            }
        }
        const MLValue a = ml_asym_branch(alpha, beta, x);
        if (a.error < best.error) best = a;
    }
    return best;
}

double mittag_leffler(double alpha, double beta, double x) {
    const MLValue v = mittag_leffler_est(alpha, beta, x);
    if (v.error > std::max(1e-10, 1e-7 * std::abs(v.value)))
        throw NumericError("mittag_leffler: neither branch reaches the accuracy target");
    return v.value;
}

} // namespace weylkit
