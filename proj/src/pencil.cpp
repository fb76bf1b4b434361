#include "weylkit/pencil.hpp"

#include "weylkit/detail/linfit.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace weylkit {

PencilModel::PencilModel(std::vector<double> mass, std::vector<double> stiffness)
    : m_(std::move(mass)), a_(std::move(stiffness)) {
    if (m_.empty() || m_.size() != a_.size())
        throw std::invalid_argument("PencilModel: mass and stiffness must be nonempty and match");
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (!(m_[i] >= 0.0) || !std::isfinite(m_[i]))
            throw std::invalid_argument("PencilModel: masses must be finite and >= 0");
        if (!(a_[i] > 0.0) || !std::isfinite(a_[i]))
            throw std::invalid_argument("PencilModel: stiffnesses must be finite and > 0");
    }
}

bool PencilModel::has_degenerate() const {
    for (double v : m_)
        if (v == 0.0) return true;
    return false;
}

double PencilModel::rate(std::size_t i) const {
    if (degenerate(i)) return std::numeric_limits<double>::infinity();
    return a_[i] / m_[i];
}

namespace {

struct NormPair {
    double plain, weighted, min_denom;
};

NormPair pencil_norms(const PencilModel& model, std::complex<double> z) {
    NormPair r{0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double den = std::abs(z * model.m(i) + model.a(i));
        r.min_denom = std::min(r.min_denom, den);
        if (den > 0.0) {
            r.plain = std::max(r.plain, 1.0 / den);
            r.weighted = std::max(r.weighted, model.m(i) / den);
        } else {
            r.plain = r.weighted = std::numeric_limits<double>::infinity();
        }
    }
    return r;
}

} // namespace

ConditionPReport check_condition_P(const PencilModel& model, double c, double r_min,
                                   double r_max, std::size_t n_radii) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("check_condition_P: c must be finite and >= 0");
    if (!(r_min > 0.0) || !(r_max >= 10.0 * r_min))
        throw std::invalid_argument("check_condition_P: need 0 < r_min and r_max >= 10 r_min");
    if (n_radii < 4) throw std::invalid_argument("check_condition_P: need >= 4 radii");

    ConditionPReport rep;
    rep.c = c;
    rep.min_denom = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < model.size(); ++i)
        if (!model.degenerate(i) && model.rate(i) <= c) rep.pole_free = false;

    const double quarter = std::sqrt(0.5);
    std::vector<double> lx, ly_plain, ly_weighted;
    for (std::size_t k = 0; k < n_radii; ++k) {
        const double r = r_min * std::pow(r_max / r_min, static_cast<double>(k) /
                                                             static_cast<double>(n_radii - 1));
        const std::complex<double> samples[7] = {
            {r, 0.0},
            {r * quarter, r * quarter},
            {r * quarter, -r * quarter},
            {0.0, r},
            {0.0, -r},
            {-c * (1.0 + r), r},  // boundary of the region at |Im z| = r
            {-c * (1.0 + r), -r},
        };
        for (const auto& z : samples) {
            const NormPair np = pencil_norms(model, z);
            rep.min_denom = std::min(rep.min_denom, np.min_denom);
            ++rep.n_samples;
            if (!std::isfinite(np.plain)) continue; // sampled a pole exactly
            lx.push_back(std::log(1.0 + std::abs(z)));
            ly_plain.push_back(std::log(std::max(np.plain, 1e-300)));
            ly_weighted.push_back(std::log(std::max(np.weighted, 1e-300)));
        }
    }

    const detail::LineFit fp = detail::fit_line(lx, ly_plain);
    rep.beta_fit = -fp.slope;
    const detail::LineFit fw = detail::fit_line(lx, ly_weighted);
    rep.beta_weighted = -fw.slope;

    // Prefactors that make the fitted law an upper bound over the samples.
    for (std::size_t i = 0; i < lx.size(); ++i) {
        rep.M_fit = std::max(rep.M_fit, std::exp(ly_plain[i] + rep.beta_fit * lx[i]));
        rep.M_weighted =
            std::max(rep.M_weighted, std::exp(ly_weighted[i] + rep.beta_weighted * lx[i]));
    }
    return rep;
}

} // namespace weylkit
