#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylkit {

/**
 * Integrability exponent p in [1, inf) together with its conjugate q,
 * 1/p + 1/q = 1.  For p == 1 the conjugate is +infinity and callers that
 * need an L^q integral must branch to a sup-norm computation instead;
 * conjugate_infinite() exists so that branch is explicit at call sites.
 */
class Exponent {
public:
    explicit Exponent(double p) : p_(p) {
        if (!std::isfinite(p) || p < 1.0)
            throw std::invalid_argument("Exponent: p must be finite and >= 1");
    }

    double p() const { return p_; }

    bool conjugate_infinite() const { return p_ == 1.0; }

    // q = p/(p-1); +infinity when p == 1.
    double q() const {
        if (conjugate_infinite()) return std::numeric_limits<double>::infinity();
        return p_ / (p_ - 1.0);
    }

private:
    double p_;
};

} // namespace weylkit
