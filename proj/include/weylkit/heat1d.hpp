#pragma once

#include "weylkit/grid_function.hpp"
#include "weylkit/pencil.hpp"

#include <functional>
#include <vector>

namespace weylkit {

/**
 * Dirichlet finite-difference model of m(x) u_t = u_xx - b u + f on (0, 1):
 * three-point Laplacian on n interior nodes with spacing h = 1/(n+1),
 * stiffness A = -Lap_h + b I (symmetric positive definite for b >= 0) and
 * mass M = diag(m(x_j)) with m >= 0, possibly vanishing on part of the rod.
 *
 * The generalized eigenproblem M v = mu A v with A-orthonormal eigenvectors
 * V decouples the system into scalar slots mu_k y_k' + y_k = (V^T f)_k,
 * exposed as a PencilModel with unit stiffnesses; slots with mu_k = 0 are
 * the algebraic directions of the massless subregion.  For unit mass the
 * modes are the discrete sine basis and sin(pi x) forcing activates exactly
 * one slot.
 */
class Heat1D {
public:
    Heat1D(std::size_t n_interior, double b, const std::function<double(double)>& mass);

    std::size_t n() const { return n_; }
    double h() const { return h_; }
    double b() const { return b_; }
    const std::vector<double>& nodes() const { return x_; }
    const std::vector<double>& node_mass() const { return m_; }
    const std::vector<double>& modal_mass() const { return mu_; }
    const PencilModel& modal_model() const { return model_; }

    std::vector<double> to_modal(const std::vector<double>& phys) const;
    std::vector<double> to_physical(const std::vector<double>& modal) const;
    GridFunction to_modal(const GridFunction& f) const;
    GridFunction to_physical(const GridFunction& y) const;

    // Discrete L2 norm sqrt(h * sum v_j^2) on nodal vectors.
    double trace_norm(const std::vector<double>& v) const;

    // sin(k pi x) sampled at the interior nodes.
    std::vector<double> sine_profile(int k) const;

    // Stiffness action (A v)_j on a nodal vector, for constraint residuals.
    std::vector<double> apply_stiffness(const std::vector<double>& v) const;

private:
    std::size_t n_;
    double h_, b_;
    std::vector<double> x_, m_;
    std::vector<double> V_; // row-major n x n, column k = A-orthonormal mode k
    std::vector<double> mu_;
    PencilModel model_;
};

} // namespace weylkit
