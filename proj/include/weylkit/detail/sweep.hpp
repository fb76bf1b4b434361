#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace weylkit::detail {

// |v|^p with fast paths for the common exponents.
inline double pow_p(double v, double p) {
    if (p == 2.0) return v * v;
    if (p == 1.0) return std::abs(v);
    return std::pow(std::abs(v), p);
}

inline double root_p(double v, double p) {
    if (p == 2.0) return std::sqrt(v);
    if (p == 1.0) return v;
    return std::pow(v, 1.0 / p);
}

// prefix[i] = sum of d[0..i-1]; size n+1.
inline void build_prefix(const std::vector<double>& d, std::vector<double>& prefix) {
    prefix.resize(d.size() + 1);
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + d[i];
}

struct WindowMax {
    double sum = 0.0;
    std::size_t start = 0;
};

// Largest sum of m consecutive entries with the window start in [i_lo, i_hi],
// read off a prebuilt prefix array.  Caller guarantees i_hi + m < prefix.size().
inline WindowMax max_window_sum(const std::vector<double>& prefix, std::size_t m,
                                std::size_t i_lo, std::size_t i_hi) {
    WindowMax best{-1.0, i_lo};
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
        double s = prefix[i + m] - prefix[i];
        if (s > best.sum) {
            best.sum = s;
            best.start = i;
        }
    }
    if (best.sum < 0.0) best.sum = 0.0;
    return best;
}

} // namespace weylkit::detail
