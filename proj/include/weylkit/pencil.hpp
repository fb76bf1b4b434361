#pragma once

#include <cstddef>
#include <vector>

namespace weylkit {

/**
 * Diagonal operator pencil lambda*M + A with M = diag(m_i), m_i >= 0, and
 * A = diag(a_i), a_i > 0.  Slots with m_i = 0 are degenerate: the evolution
 * problem M u' + A u = f has no dynamics there, only the algebraic
 * constraint a_i u_i = f_i.  Nondegenerate slots relax at rate a_i/m_i.
 */
class PencilModel {
public:
    PencilModel(std::vector<double> mass, std::vector<double> stiffness);

    std::size_t size() const { return m_.size(); }
    double m(std::size_t i) const { return m_[i]; }
    double a(std::size_t i) const { return a_[i]; }
    bool degenerate(std::size_t i) const { return m_[i] == 0.0; }
    bool has_degenerate() const;
    double rate(std::size_t i) const; // a_i/m_i, +infinity on degenerate slots

    const std::vector<double>& masses() const { return m_; }
    const std::vector<double>& stiffnesses() const { return a_; }

private:
    std::vector<double> m_, a_;
};

/**
 * Samples the region { Re z >= -c (|Im z| + 1) } on log-spaced radii along
 * the rays arg z in {0, +-pi/4, +-pi/2} and along the region boundary, and
 * fits power decay of the pencil resolvent there:
 *
 *   ||(z M + A)^{-1}||   ~ M_fit      * (1 + |z|)^{-beta_fit}
 *   ||(z M + A)^{-1} M|| ~ M_weighted * (1 + |z|)^{-beta_weighted}
 *
 * (both sup-norms of the diagonal).  The fits are global log-log least
 * squares over the sampled range.  pole_free is decided exactly: the poles
 * sit at z = -a_i/m_i, inside the region iff some rate a_i/m_i <= c.
 */
struct ConditionPReport {
    double c = 0.0;
    std::size_t n_samples = 0;
    bool pole_free = true;
    double min_denom = 0.0; // smallest |z m_i + a_i| seen while sampling
    double beta_fit = 0.0;
    double M_fit = 0.0;
    double beta_weighted = 0.0;
    double M_weighted = 0.0;
};

ConditionPReport check_condition_P(const PencilModel& model, double c, double r_min = 1e-2,
                                   double r_max = 1e4, std::size_t n_radii = 25);

} // namespace weylkit
