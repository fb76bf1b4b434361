#include "weylkit/bounds.hpp"

#include "weylkit/convolution.hpp"
#include "weylkit/detail/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylkit {

namespace {

// Integral of |q|^p over [0, x], exact at cell boundaries and linear inside
// a cell (the samples are cell constants, so this is the true integral).
class PowerPrefix {
public:
    PowerPrefix(const GridFunction& q, double p) : dt_(q.dt()) {
        prefix_.resize(q.size() + 1, 0.0);
        for (std::size_t i = 0; i < q.size(); ++i)
            prefix_[i + 1] = prefix_[i] + detail::pow_p(q.norm_at(i), p) * dt_;
    }
    double at(double x) const {
        if (x <= 0.0) return 0.0;
        const double u = x / dt_;
        const auto i = static_cast<std::size_t>(std::min(
            std::floor(u), static_cast<double>(prefix_.size() - 2)));
        const double frac = std::min(1.0, u - static_cast<double>(i));
        return prefix_[i] + frac * (prefix_[i + 1] - prefix_[i]);
    }
    double full_span() const { return dt_ * static_cast<double>(prefix_.size() - 1); }

private:
    double dt_;
    std::vector<double> prefix_;
};

} // namespace

DominationReport bound_profile(const GridFunction& q, const KernelSpec& k, const Exponent& e,
                               const std::function<double(double)>& a_of_t,
                               const std::vector<double>& probes, double tol) {
    const EnvelopeLaw& env = k.envelope();
    if (env.kind != DecayKind::Algebraic)
        throw std::invalid_argument("bound_profile: the two-piece bound targets algebraic decay");
    if (!a_of_t) throw std::invalid_argument("bound_profile: missing cut function a(t)");
    if (probes.empty()) throw std::invalid_argument("bound_profile: no probe times");

    DominationReport rep;
    rep.t = probes;
    rep.Q = finite_conv_at(q, k, probes);
    rep.Bp.resize(probes.size());

    PowerPrefix P(q, e.p());
    const double p = e.p();
    const double qc = e.q(); // +inf for p = 1
    const double dexp = env.beta - 1.0 - env.gamma;

    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double t = probes[i];
        if (t < 0.0) throw std::invalid_argument("bound_profile: probes must be nonnegative");
        if (t == 0.0) {
            rep.Bp[i] = 0.0;
            continue;
        }
        double a = a_of_t(t);
        if (!(a >= 0.0) || !(a <= t))
            throw std::invalid_argument("bound_profile: cut a(t) must satisfy 0 <= a(t) <= t");
        const double head = P.at(a);                  // int_0^a |q|^p
        const double tail = std::max(0.0, P.at(t) - head); // int_a^t |q|^p
        const double gap = t - a;
        double term1, term2;
        if (e.conjugate_infinite()) {
            term1 = (a > 0.0 ? std::pow(gap, dexp) * head : 0.0);
            // sup of the envelope over [0, t-a]; infinite when singular at 0.
            const double sup0 =
                env.singular_at_zero() ? std::numeric_limits<double>::infinity() : env.value(0.0);
            term2 = tail > 0.0 ? (sup0 / env.M) * tail : 0.0;
        } else {
            term1 = (a > 0.0 ? std::pow(a, 1.0 / qc) * std::pow(gap, dexp) *
                                   detail::root_p(head, p)
                             : 0.0);
            term2 = std::pow(gap, dexp + 1.0 / qc) * detail::root_p(tail, p);
        }
        rep.Bp[i] = env.M * (term1 + term2);
    }

    rep.max_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double excess = rep.Q[i] - rep.Bp[i];
        rep.max_excess = std::max(rep.max_excess, excess);
        if (excess > tol) rep.violations.push_back(i);
    }
    rep.dominated = rep.violations.empty();
    return rep;
}

} // namespace weylkit
