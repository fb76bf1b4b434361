#include "weylkit/gallery.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace weylkit {

namespace {

// Smooth ramp: 0 for u <= 0, 1 for u >= 1, C-infinity in between.
double smoothstep_inf(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double h0 = std::exp(-1.0 / u);
    const double h1 = std::exp(-1.0 / (1.0 - u));
    return h0 / (h0 + h1);
}

double square_train(double t) {
    if (t < 0.0) return 0.0;
    const double n = std::floor(std::sqrt(t));
    const double lo = n * n;
    return (t >= lo && t <= lo + 1.0) ? 1.0 : 0.0;
}

double mollified_train(double t, double w) {
    if (t < 0.0) return 0.0;
    const double n = std::floor(std::sqrt(t));
    const double lo = n * n;
    if (t < lo || t > lo + 1.0) return 0.0;
    const double up = smoothstep_inf((t - lo) / w);
    const double down = smoothstep_inf((lo + 1.0 - t) / w);
    return up * down;
}

} // namespace

GridFunction make_example(const std::string& name, const GalleryParams& p) {
    if (p.dt <= 0.0 || p.span <= 0.0)
        throw std::invalid_argument("make_example: dt and span must be positive");
    std::function<double(double)> fn;
    if (name == "zero") {
        fn = [](double) { return 0.0; };
    } else if (name == "constant") {
        fn = [&](double) { return p.value; };
    } else if (name == "bump") {
        if (!(p.b > p.a)) throw std::invalid_argument("make_example: bump needs b > a");
        fn = [&](double t) { return (t >= p.a && t <= p.b) ? p.value : 0.0; };
    } else if (name == "chi_squares") {
        fn = [&](double t) { return p.value * square_train(t); };
    } else if (name == "mollified_chi_squares") {
        if (!(p.width > 0.0 && p.width < 0.5))
            throw std::invalid_argument("make_example: mollifier width must lie in (0, 1/2)");
        fn = [&](double t) { return p.value * mollified_train(t, p.width); };
    } else if (name == "quasi_periodic") {
        if (p.amplitudes.size() != p.omegas.size() || p.amplitudes.empty())
            throw std::invalid_argument(
                "make_example: amplitudes and omegas must be nonempty and match");
        fn = [&](double t) {
            double s = 0.0;
            for (std::size_t k = 0; k < p.omegas.size(); ++k)
                s += p.amplitudes[k] * std::sin(p.omegas[k] * t);
            return s;
        };
    } else if (name == "exp_decay") {
        fn = [&](double t) { return p.value * std::exp(-p.rate * t); };
    } else {
        throw std::invalid_argument("make_example: unknown example '" + name + "'");
    }
    const auto n = static_cast<std::size_t>(std::llround(p.span / p.dt));
    if (n == 0) throw std::invalid_argument("make_example: span shorter than one cell");
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = fn(p.t0 + (static_cast<double>(i) + 0.5) * p.dt);
    return GridFunction(p.t0 + 0.5 * p.dt, p.dt, 1, std::move(vals), p.domain);
}

} // namespace weylkit
