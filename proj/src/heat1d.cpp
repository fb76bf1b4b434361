#include "weylkit/heat1d.hpp"

#include "weylkit/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace weylkit {

Heat1D::Heat1D(std::size_t n_interior, double b, const std::function<double(double)>& mass)
    : n_(n_interior), h_(1.0 / static_cast<double>(n_interior + 1)), b_(b),
      model_({0.0}, {1.0}) {
    if (n_ < 2) throw std::invalid_argument("Heat1D: need at least two interior nodes");
    if (!(b >= 0.0) || !std::isfinite(b))
        throw std::invalid_argument("Heat1D: zeroth-order coefficient must be finite and >= 0");

    x_.resize(n_);
    m_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        x_[j] = static_cast<double>(j + 1) * h_;
        m_[j] = mass(x_[j]);
        if (!(m_[j] >= 0.0) || !std::isfinite(m_[j]))
            throw std::invalid_argument("Heat1D: mass must be finite and >= 0 at every node");
    }

    const auto ni = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ni, ni);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ni, ni);
    const double di = 2.0 / (h_ * h_) + b_;
    const double off = -1.0 / (h_ * h_);
    for (Eigen::Index j = 0; j < ni; ++j) {
        A(j, j) = di;
        if (j + 1 < ni) A(j, j + 1) = A(j + 1, j) = off;
        M(j, j) = m_[static_cast<std::size_t>(j)];
    }

    // Solves M v = mu A v; A is the positive-definite factor, so zero mass
    // is allowed and shows up as mu = 0.
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(M, A);
    if (ges.info() != Eigen::Success)
        throw NumericError("Heat1D: generalized eigendecomposition failed");

    mu_.resize(n_);
    V_.resize(n_ * n_);
    const double mu_max = std::max(1.0, ges.eigenvalues().maxCoeff());
    for (std::size_t k = 0; k < n_; ++k) {
        double mu = ges.eigenvalues()(static_cast<Eigen::Index>(k));
        if (mu < -1e-10 * mu_max)
            throw NumericError("Heat1D: negative generalized eigenvalue from a psd mass");
        // Rank deficiency of the mass reaches the solver as eigenvalue noise
        // of size eps*scale; snap it to an exact algebraic slot.  Genuine
        // modal masses are bounded below by h^2/4, far above the threshold.
        mu_[k] = mu <= 1e-10 * mu_max ? 0.0 : mu;
        for (std::size_t j = 0; j < n_; ++j)
            V_[j * n_ + k] =
                ges.eigenvectors()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    }
    model_ = PencilModel(mu_, std::vector<double>(n_, 1.0));
}

std::vector<double> Heat1D::to_modal(const std::vector<double>& phys) const {
    if (phys.size() != n_) throw std::invalid_argument("Heat1D::to_modal: wrong length");
    std::vector<double> y(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) y[k] += V_[j * n_ + k] * phys[j];
    return y;
}

std::vector<double> Heat1D::to_physical(const std::vector<double>& modal) const {
    if (modal.size() != n_) throw std::invalid_argument("Heat1D::to_physical: wrong length");
    std::vector<double> u(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) u[j] += V_[j * n_ + k] * modal[k];
    return u;
}

GridFunction Heat1D::to_modal(const GridFunction& f) const {
    if (f.dim() != n_) throw std::invalid_argument("Heat1D::to_modal: dimension mismatch");
    std::vector<double> data(f.size() * n_, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = f.value(i, j);
            for (std::size_t k = 0; k < n_; ++k) data[i * n_ + k] += V_[j * n_ + k] * v;
        }
    return {f.t0(), f.dt(), n_, std::move(data), f.domain()};
}

GridFunction Heat1D::to_physical(const GridFunction& y) const {
    if (y.dim() != n_) throw std::invalid_argument("Heat1D::to_physical: dimension mismatch");
    std::vector<double> data(y.size() * n_, 0.0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const double v = y.value(i, k);
            for (std::size_t j = 0; j < n_; ++j) data[i * n_ + j] += V_[j * n_ + k] * v;
        }
    return {y.t0(), y.dt(), n_, std::move(data), y.domain()};
}

double Heat1D::trace_norm(const std::vector<double>& v) const {
    if (v.size() != n_) throw std::invalid_argument("Heat1D::trace_norm: wrong length");
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(h_ * s);
}

std::vector<double> Heat1D::sine_profile(int k) const {
    if (k < 1) throw std::invalid_argument("Heat1D::sine_profile: mode index must be >= 1");
    std::vector<double> v(n_);
    for (std::size_t j = 0; j < n_; ++j) v[j] = std::sin(static_cast<double>(k) * M_PI * x_[j]);
    return v;
}

std::vector<double> Heat1D::apply_stiffness(const std::vector<double>& v) const {
    if (v.size() != n_) throw std::invalid_argument("Heat1D::apply_stiffness: wrong length");
    std::vector<double> out(n_, 0.0);
    const double di = 2.0 / (h_ * h_) + b_;
    const double off = -1.0 / (h_ * h_);
    for (std::size_t j = 0; j < n_; ++j) {
        out[j] = di * v[j];
        if (j > 0) out[j] += off * v[j - 1];
        if (j + 1 < n_) out[j] += off * v[j + 1];
    }
    return out;
}

} // namespace weylkit
