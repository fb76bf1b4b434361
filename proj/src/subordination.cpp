#include "weylkit/subordination.hpp"

#include "weylkit/detail/linfit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weylkit {

SubordinatedFamily::SubordinatedFamily(double gamma, double rate)
    : wright_(gamma), gamma_(gamma), rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("SubordinatedFamily: rate must be finite and positive");
}

double SubordinatedFamily::S(double t) const {
    if (t < 0.0) throw std::domain_error("SubordinatedFamily::S: t must be >= 0");
    return wright_.laplace(0.0, rate_ * std::pow(t, gamma_));
}

double SubordinatedFamily::R(double t) const {
    if (!(t > 0.0)) throw std::domain_error("SubordinatedFamily::R: t must be > 0");
    return gamma_ * std::pow(t, gamma_ - 1.0) * wright_.laplace(1.0, rate_ * std::pow(t, gamma_));
}

FamilyEstimateReport verify_family_estimates(double gamma, double rate, double beta_base,
                                             double t_min, double t_max,
                                             std::size_t n_per_decade) {
    if (!(beta_base > 0.0) || !(beta_base <= 1.0))
        throw std::invalid_argument("verify_family_estimates: beta_base must lie in (0, 1]");
    if (!(t_min > 0.0) || !(t_min < 0.1) || !(t_max > 10.0))
        throw std::invalid_argument("verify_family_estimates: need t_min < 0.1 < 10 < t_max");
    if (n_per_decade < 4)
        throw std::invalid_argument("verify_family_estimates: need >= 4 samples per decade");

    const SubordinatedFamily fam(gamma, rate);
    FamilyEstimateReport rep;
    rep.gamma = gamma;
    rep.rate = rate;
    rep.beta_base = beta_base;

    const double l0 = std::log10(t_min), l1 = std::log10(t_max);
    const auto n = static_cast<std::size_t>(std::lround((l1 - l0) * static_cast<double>(n_per_decade))) + 1;
    rep.n_samples = n;

    const double ws = 1.0 - gamma * beta_base; // small-t weight exponent
    const double wl = 1.0 + gamma;             // large-t weight exponent

    // Extreme half of each region, in log scale.
    const double small_cut = std::pow(10.0, 0.5 * l0);
    const double large_cut = std::pow(10.0, 0.5 * l1);

    std::vector<double> lt_s, lr_s, lw_s, lt_l, lr_l, lw_l;
    bool first_small = true;
    double last_large_w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t =
            std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
        const double r = fam.R(t);
        if (t <= 1.0 + 1e-12) {
            const double w = std::pow(t, ws) * r;
            rep.M1 = std::max(rep.M1, w);
            if (first_small) {
                rep.limit_small = w;
                first_small = false;
            }
            if (t <= small_cut) {
                lt_s.push_back(std::log(t));
                lr_s.push_back(std::log(std::max(r, 1e-300)));
                lw_s.push_back(std::log(std::max(w, 1e-300)));
            }
        }
        if (t >= 1.0 - 1e-12) {
            const double w = std::pow(t, wl) * r;
            rep.M2 = std::max(rep.M2, w);
            last_large_w = w;
            if (t >= large_cut) {
                lt_l.push_back(std::log(t));
                lr_l.push_back(std::log(std::max(r, 1e-300)));
                lw_l.push_back(std::log(std::max(w, 1e-300)));
            }
        }
    }
    rep.limit_large = last_large_w;

    rep.slope_small = detail::fit_line(lt_s, lr_s).slope;
    rep.slope_large = detail::fit_line(lt_l, lr_l).slope;
    rep.wslope_small = detail::fit_line(lt_s, lw_s).slope;
    rep.wslope_large = detail::fit_line(lt_l, lw_l).slope;

    // Growth toward t -> 0 shows up as a negative weighted slope; growth
    // toward t -> inf as a positive one.
    rep.bounded_small = rep.wslope_small >= -0.1;
    rep.bounded_large = rep.wslope_large <= 0.1;
    return rep;
}

} // namespace weylkit
