#include "weylkit/admissibility.hpp"

#include "weylkit/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Decay factor without the M and the t^(beta-1) power.
double decay_factor(const EnvelopeLaw& env, double s) {
    if (env.kind == DecayKind::Exponential) return std::exp(-env.c * s);
    return 1.0 / (1.0 + std::pow(s, env.gamma));
}

// Integrates f over [a, infinity) where f(s) <= bound_coef * exp(-rate*s)
// for s >= max(a, 1).  Doubles the window until the analytic remainder is
// negligible against the accumulated value.
template <class F>
double integrate_exp_tail(F&& f, double a, double rate, double bound_coef) {
    double acc = 0.0, lo = a;
    double hi = std::max(2.0 * a, a + 4.0 / rate);
    for (int it = 0; it < 64; ++it) {
        acc += integrate(f, lo, hi, 1e-14, 1e-11).value;
        const double rem = bound_coef * std::exp(-rate * hi) / rate;
        if (rem < 1e-16 * std::abs(acc) + 1e-300) return acc;
        lo = hi;
        hi *= 2.0;
    }
    throw NumericError("integrate_exp_tail: remainder failed to vanish");
}

double algebraic_tail_integral(const EnvelopeLaw& env, double T) {
    // int_T^inf envelope <= M * T^(beta-gamma) / (gamma-beta), from 1+s^g >= s^g.
    return env.M * std::pow(T, env.beta - env.gamma) / (env.gamma - env.beta);
}

double exponential_tail_integral(const EnvelopeLaw& env, double T) {
    // Valid for T >= 1 where s^(beta-1) <= T^(beta-1) <= 1.
    return env.M * std::exp(-env.c * T) * std::pow(T, env.beta - 1.0) / env.c;
}

} // namespace

double lq_norm_interval(const EnvelopeLaw& env, double q, double a, double b) {
    if (a < 0.0 || !(b > a)) throw std::invalid_argument("lq_norm_interval: need 0 <= a < b");
    if (std::isinf(q)) {
        if (a == 0.0 && env.singular_at_zero())
            throw std::invalid_argument(
                "lq_norm_interval: sup norm down to 0 is infinite for beta < 1");
        return env.value(a); // envelope decreases, so the sup sits at the left end
    }
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm_interval: q must be >= 1 or infinite");

    const double sigma = q * (env.beta - 1.0);
    if (a == 0.0 && sigma <= -1.0)
        throw std::invalid_argument(
            "lq_norm_interval: envelope^q is not integrable at 0 (q*(beta-1) <= -1)");

    auto f = [&](double s) { return std::pow(env.value(s), q); };
    double total = 0.0;
    double lo = a;
    const double split = 1.0;
    if (lo == 0.0) {
        const double up = std::min(b, split);
        // Peel off the power singularity: env^q = s^sigma * (M*decay)^q.
        auto w = [&](double s) { return std::pow(env.M * decay_factor(env, s), q); };
        total += integrate_power_left(w, sigma, up, 1e-14, 1e-11).value;
        lo = up;
        if (lo >= b) return std::pow(total, 1.0 / q);
    }
    if (std::isinf(b)) {
        const double start = std::max(lo, split);
        if (start > lo) {
            total += integrate(f, lo, start, 1e-14, 1e-11).value;
        }
        if (env.kind == DecayKind::Algebraic) {
            const double rho = q * (env.gamma + 1.0 - env.beta); // > 1 since gamma > 1 >= beta
            total += integrate_algebraic_tail(f, start, rho, 1e-14, 1e-11).value;
        } else {
            const double coef = std::pow(env.M, q); // s^(beta-1) <= 1 beyond 1
            total += integrate_exp_tail(f, start, q * env.c, coef);
        }
    } else {
        total += integrate(f, lo, b, 1e-14, 1e-11).value;
    }
    return std::pow(total, 1.0 / q);
}

double envelope_l1(const EnvelopeLaw& env) {
    const double n1 = lq_norm_interval(env, 1.0, 0.0, kInf);
    return n1; // L^1 norm, exponent 1/q is a no-op
}

double tail_sum(const EnvelopeLaw& env, double q, double t, double atol) {
    if (t < 0.0) throw std::invalid_argument("tail_sum: t must be >= 0");
    double acc = 0.0;
    const std::size_t cap = 200000;
    for (std::size_t k = 0; k < cap; ++k) {
        const double a = t + static_cast<double>(k);
        acc += lq_norm_interval(env, q, a, a + 1.0);
        const double T = a + 1.0;
        if (T >= 1.0) {
            const double integral = env.kind == DecayKind::Algebraic
                                        ? algebraic_tail_integral(env, T)
                                        : exponential_tail_integral(env, T);
            const double rem = env.value(T) + integral;
            if (rem < atol) return acc + rem; // certified upper bound on the full sum
        }
    }
    // Even at the cap the closing bound keeps the result an upper bound; it
    // is just looser than requested.
    const double T = t + static_cast<double>(cap);
    const double integral = env.kind == DecayKind::Algebraic ? algebraic_tail_integral(env, T)
                                                             : exponential_tail_integral(env, T);
    return acc + env.value(T) + integral;
}

AdmissibilityReport check_admissible(const KernelSpec& k, const Exponent& e) {
    const EnvelopeLaw& env = k.envelope();
    AdmissibilityReport rep;
    rep.p = e.p();
    rep.q = e.q();
    rep.kernel_l1 = envelope_l1(env);

    if (e.p() > 1.0) {
        const double cond = e.q() * (env.beta - 1.0);
        rep.pass = cond > -1.0; // strict: the boundary pair diverges
        rep.reason = rep.pass ? "q*(beta-1) > -1"
                              : "q*(beta-1) <= -1: weighted kernel norm diverges at 0";
    } else {
        rep.pass = env.beta == 1.0;
        rep.reason = rep.pass ? "p = 1 with beta = 1"
                              : "p = 1 requires beta = 1: sup-norm weight is infinite at 0";
    }
    if (!rep.pass) return rep;

    const double inv_p = 1.0 / e.p();
    rep.zeta_lo = inv_p;
    if (env.kind == DecayKind::Algebraic) {
        rep.zeta_hi = inv_p + env.gamma - env.beta;
        rep.zeta = 0.5 * (rep.zeta_lo + rep.zeta_hi);
    } else {
        rep.zeta_hi = kInf;
        rep.zeta = rep.zeta_lo + 1.0;
    }
    const double zeta = rep.zeta;

    // I2 = int_0^inf (1 + s^zeta)^(-p); zeta*p > 1 by the choice of zeta.
    {
        auto f = [&](double s) { return std::pow(1.0 + std::pow(s, zeta), -e.p()); };
        double i2 = integrate(f, 0.0, 1.0, 1e-14, 1e-11).value;
        i2 += integrate_algebraic_tail(f, 1.0, zeta * e.p(), 1e-14, 1e-11).value;
        rep.shift_integral = i2;
    }

    // I1: L^q norm (sup for p = 1) of s^(beta-1) (1+s^zeta) * decay(s).
    if (e.conjugate_infinite()) {
        // beta = 1 here, so the weight is continuous down to 0.
        auto w = [&](double s) { return (1.0 + std::pow(s, zeta)) * decay_factor(env, s); };
        double hi = env.kind == DecayKind::Exponential
                        ? std::max(10.0, 10.0 * (zeta + 1.0) / env.c)
                        : 100.0;
        rep.weight_norm = sup_on_grid(w, 0.0, hi, 4096);
    } else {
        const double q = e.q();
        const double sigma = q * (env.beta - 1.0);
        auto wq = [&](double s) {
            double v = (1.0 + std::pow(s, zeta)) * decay_factor(env, s);
            return std::pow(v, q);
        };
        auto fq = [&](double s) {
            double v = std::pow(s, env.beta - 1.0) * (1.0 + std::pow(s, zeta)) *
                       decay_factor(env, s);
            return std::pow(v, q);
        };
        double total = integrate_power_left(wq, sigma, 1.0, 1e-14, 1e-11).value;
        if (env.kind == DecayKind::Algebraic) {
            const double rho = -q * (env.beta - 1.0 + zeta - env.gamma); // > 1 at the midpoint
            total += integrate_algebraic_tail(fq, 1.0, rho, 1e-14, 1e-11).value;
        } else {
            // fq(s) <= poly(s) * exp(-rate*s/2) with poly bounded; certify the
            // cutoff against rate/2 and the polynomial sup.
            const double rate = q * env.c;
            auto poly = [&](double s) {
                return std::pow(1.0 + std::pow(s, zeta), q) * std::exp(-0.5 * rate * s);
            };
            const double coef = sup_on_grid(poly, 1.0, 4.0 + 8.0 * q * zeta / rate, 2048);
            total += integrate_exp_tail(fq, 1.0, 0.5 * rate, coef);
        }
        rep.weight_norm = std::pow(total, 1.0 / q);
    }

    rep.constant = env.M * rep.weight_norm * std::pow(rep.shift_integral, inv_p);
    return rep;
}

} // namespace weylkit
