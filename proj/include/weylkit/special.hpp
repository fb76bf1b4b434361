#pragma once

#include <cstddef>
#include <vector>

namespace weylkit {

// 1/Gamma(x), entire: returns 0 at poles (x = 0, -1, -2, ...).
double reciprocal_gamma(double x);

struct SeriesValue {
    double value = 0.0;
    double noise = 0.0; // rounding-noise estimate from the largest term
};

/**
 * Probability density of the time-subordinator: the Wright (M-Wright)
 * function of order gamma in (0, 1),
 *   W(s) = sum_n (-s)^n / (n! * Gamma(1 - gamma - gamma n)),  s >= 0,
 * with moments int s^nu W = Gamma(nu+1)/Gamma(gamma nu + 1).
 *
 * The power series suffers factorial cancellation for large s, so the
 * instance computes once, at construction, the radius where the tracked
 * series noise exceeds the cache accuracy target; past it eval() switches
 * to a Hankel ray-contour integral (uniformly accurate, quadrature
 * controlled), and deep in the tail, where values are absolutely
 * negligible, to the stretched-exponential asymptotic form.  gamma = 1/2 is
 * exact everywhere: W(s) = exp(-s^2/4)/sqrt(pi).
 *
 * laplace(nu, p) = int_0^inf s^nu W(s) exp(-p s) ds is the workhorse for
 * subordinated families.  It reuses a fixed geometric Gauss-Kronrod panel
 * cache of W values (built once), so each call costs one pass of exp/mul per
 * node; panels start at 1e-6 to resolve the concentration near 0 when p is
 * large.  moment(nu) = laplace(nu, 0).
 */
class WrightFunction {
public:
    explicit WrightFunction(double gamma);

    double order() const { return gamma_; }
    double switch_radius() const { return radius_; }
    double contour_limit() const { return contour_max_; }

    SeriesValue series(double s) const;
    double asymptotic(double s) const;
    double integral_form(double s) const;
    double eval(double s) const;

    double laplace(double nu, double p) const;
    double moment(double nu) const { return laplace(nu, 0.0); }
    static double moment_exact(double gamma, double nu);

private:
    double gamma_;
    double radius_ = 0.0;
    double contour_max_ = 0.0;
    double phi_ = 0.0; // ray angle of the contour branch
    double s_max_ = 0.0;
    // asymptotic constants: W(s) ~ pref * (s/gamma)^a * exp(-b * s^sigma)
    double a_ = 0.0, b_ = 0.0, sigma_ = 0.0, pref_ = 0.0;
    bool exact_half_ = false;
    std::vector<double> node_s_, node_w_, node_f_; // flattened panel cache
    void build_cache();
};

/**
 * Mittag-Leffler function E_{alpha,beta}(x) for real x, alpha in (0, 1]:
 * power series for moderate |x|; for negative arguments a branch-cut
 * integral representation (uniformly accurate in x, quadrature-controlled)
 * with the reflected power expansion as a fallback.  mittag_leffler_est
 * exposes the error estimate of whichever branch answered; the checked form
 * throws NumericError when no branch reaches max(1e-10, 1e-7 |value|), and
 * callers prefer an exception over silent digits loss.  This routine is
 * kept as an independent oracle for the subordinated families and never
 * feeds the solver pipeline.
 */
struct MLValue {
    double value = 0.0;
    double error = 0.0;
};

MLValue mittag_leffler_est(double alpha, double beta, double x);
double mittag_leffler(double alpha, double beta, double x);

} // namespace weylkit
