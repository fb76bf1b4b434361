#include "weylkit/vanishing.hpp"

#include "weylkit/detail/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylkit {

std::string to_string(VanishClass c) {
    switch (c) {
        case VanishClass::None: return "none";
        case VanishClass::Weyl: return "weyl_vanishing";
        case VanishClass::EquiWeyl: return "equi_weyl_vanishing";
        case VanishClass::Stepanov: return "stepanov_vanishing";
        case VanishClass::C0: return "uniform_vanishing";
    }
    return "none";
}

VanishingReport classify_vanishing(const GridFunction& q, const Exponent& e,
                                   const VanishingParams& vp) {
    if (q.domain() != Domain::HalfLine)
        throw std::invalid_argument("classify_vanishing: expects half-line data");
    if (vp.horizons.size() < 2)
        throw std::invalid_argument("classify_vanishing: need at least two horizons");
    for (std::size_t i = 1; i < vp.horizons.size(); ++i)
        if (!(vp.horizons[i] > vp.horizons[i - 1]))
            throw std::invalid_argument("classify_vanishing: horizons must increase strictly");
    if (vp.sp.l_schedule.size() < 2)
        throw std::invalid_argument("classify_vanishing: need at least two window lengths");

    const double dt = q.dt();
    const std::size_t n = q.size();
    const double p = e.p();

    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = detail::pow_p(q.norm_at(i), p);
    std::vector<double> prefix;
    detail::build_prefix(d, prefix);

    // suffix_max[i] = sup of |q| over samples i..n-1
    std::vector<double> suffix_max(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) suffix_max[i] = std::max(suffix_max[i + 1], q.norm_at(i));

    VanishingReport rep;
    rep.horizons = vp.horizons;
    auto cells = [&](double l) {
        return static_cast<std::size_t>(std::max<long long>(1, std::llround(l / dt)));
    };
    for (double l : vp.sp.l_schedule) rep.l_values.push_back(static_cast<double>(cells(l)) * dt);

    const std::size_t m1 = cells(1.0);
    for (double th : vp.horizons) {
        auto i_t = static_cast<std::size_t>(std::max<long long>(0, std::llround((th - q.cell_start()) / dt)));
        std::vector<double> row;
        for (double l : vp.sp.l_schedule) {
            const std::size_t m = cells(l);
            if (i_t + m > n)
                throw std::invalid_argument(
                    "classify_vanishing: span too short for horizon plus window");
            detail::WindowMax best = detail::max_window_sum(prefix, m, i_t, n - m);
            row.push_back(detail::root_p(best.sum / static_cast<double>(m), p));
        }
        rep.s_tl.push_back(std::move(row));
        if (i_t + m1 > n)
            throw std::invalid_argument("classify_vanishing: span too short for unit window");
        detail::WindowMax u = detail::max_window_sum(prefix, m1, i_t, n - m1);
        rep.s_t1.push_back(detail::root_p(u.sum / static_cast<double>(m1), p));
        rep.sup_tail.push_back(suffix_max[std::min(i_t, n - 1)]);
    }

    const double atol = vp.sp.atol, rtol = vp.sp.rtol;
    rep.threshold = atol + rtol * rep.s_tl[0][0];

    rep.c0_limit = extrapolate_limit(rep.sup_tail, atol, rtol).limit;
    rep.stepanov_limit = extrapolate_limit(rep.s_t1, atol, rtol).limit;

    // equi: limit over t for each fixed l, then limit over l.
    std::vector<double> inner_t;
    for (std::size_t li = 0; li < rep.l_values.size(); ++li) {
        std::vector<double> col;
        for (const auto& row : rep.s_tl) col.push_back(row[li]);
        inner_t.push_back(extrapolate_limit(col, atol, rtol).limit);
    }
    rep.equi_limit = extrapolate_limit(inner_t, atol, rtol).limit;

    // weyl: limit over l for each fixed t, then limit over t.
    std::vector<double> inner_l;
    for (const auto& row : rep.s_tl) inner_l.push_back(extrapolate_limit(row, atol, rtol).limit);
    rep.weyl_limit = extrapolate_limit(inner_l, atol, rtol).limit;

    rep.c0_pass = rep.c0_limit <= rep.threshold;
    rep.stepanov_pass = rep.stepanov_limit <= rep.threshold;
    rep.equi_pass = rep.equi_limit <= rep.threshold;
    rep.weyl_pass = rep.weyl_limit <= rep.threshold;
    // Close the flags over the inclusion chain.
    rep.stepanov_pass = rep.stepanov_pass || rep.c0_pass;
    rep.equi_pass = rep.equi_pass || rep.stepanov_pass;
    rep.weyl_pass = rep.weyl_pass || rep.equi_pass;

    rep.verdict = rep.c0_pass        ? VanishClass::C0
                  : rep.stepanov_pass ? VanishClass::Stepanov
                  : rep.equi_pass     ? VanishClass::EquiWeyl
                  : rep.weyl_pass     ? VanishClass::Weyl
                                      : VanishClass::None;
    return rep;
}

} // namespace weylkit
