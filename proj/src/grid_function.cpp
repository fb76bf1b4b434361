#include "weylkit/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylkit {

GridFunction::GridFunction(double t0, double dt, std::size_t dim,
                           std::vector<double> samples, Domain domain)
    : t0_(t0), dt_(dt), dim_(dim), data_(std::move(samples)), domain_(domain) {
    if (!std::isfinite(t0_) || !std::isfinite(dt_) || dt_ <= 0.0)
        throw std::invalid_argument("GridFunction: dt must be finite and positive");
    if (dim_ == 0)
        throw std::invalid_argument("GridFunction: dim must be >= 1");
    if (data_.empty() || data_.size() % dim_ != 0)
        throw std::invalid_argument("GridFunction: sample count must be a nonzero multiple of dim");
    for (double v : data_)
        if (!std::isfinite(v))
            throw std::invalid_argument("GridFunction: samples must be finite");
    if (domain_ == Domain::HalfLine && t0_ < -1e-9 * dt_)
        throw std::invalid_argument("GridFunction: half-line samples must start at or after t = 0");
}

GridFunction GridFunction::zeros(double t0, double dt, std::size_t n, std::size_t dim,
                                 Domain domain) {
    return GridFunction(t0, dt, dim, std::vector<double>(n * dim, 0.0), domain);
}

double GridFunction::norm_at(std::size_t i) const {
    if (dim_ == 1) return std::abs(data_[i]);
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
        double v = data_[i * dim_ + c];
        s += v * v;
    }
    return std::sqrt(s);
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, norm_at(i));
    return m;
}

std::size_t GridFunction::index_of(double t) const {
    // Round half up so a cell boundary belongs to the cell on its right.
    double x = (t - t0_) / dt_ + 0.5;
    double fi = std::floor(x);
    if (fi < 0.0 || fi >= static_cast<double>(size()))
        throw std::out_of_range("GridFunction: t outside the sampled span");
    return static_cast<std::size_t>(fi);
}

bool GridFunction::on_boundary_lattice(double t, double tol) const {
    double u = (t - cell_start()) / dt_;
    return std::abs(u - std::round(u)) <= tol;
}

GridFunction GridFunction::slice(std::size_t first, std::size_t count) const {
    if (first + count > size() || count == 0)
        throw std::out_of_range("GridFunction::slice: range outside data");
    std::vector<double> sub(data_.begin() + static_cast<std::ptrdiff_t>(first * dim_),
                            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * dim_));
    return GridFunction(t_at(first), dt_, dim_, std::move(sub), domain_);
}

namespace {
void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (a.dim() != b.dim() || a.size() != b.size() || a.dt() != b.dt() || a.t0() != b.t0())
        throw std::invalid_argument("GridFunction: grids must coincide for pointwise arithmetic");
}
} // namespace

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<double> out(a.data_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.data_[i] - b.data_[i];
    return GridFunction(a.t0_, a.dt_, a.dim_, std::move(out), a.domain_);
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<double> out(a.data_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.data_[i] + b.data_[i];
    return GridFunction(a.t0_, a.dt_, a.dim_, std::move(out), a.domain_);
}

GridFunction add_on_overlap(const GridFunction& a, const GridFunction& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("add_on_overlap: dimension mismatch");
    if (a.dt() != b.dt())
        throw std::invalid_argument("add_on_overlap: step mismatch");
    double dt = a.dt();
    double offset = (b.t0() - a.t0()) / dt;
    if (std::abs(offset - std::round(offset)) > 1e-9)
        throw std::invalid_argument("add_on_overlap: cell lattices are not aligned");
    double lo = std::max(a.t0(), b.t0());
    double hi = std::min(a.t_end(), b.t_end());
    if (hi < lo - 1e-9 * dt)
        throw std::invalid_argument("add_on_overlap: spans do not overlap");
    std::size_t ia = a.index_of(lo), ib = b.index_of(lo);
    std::size_t n = static_cast<std::size_t>(std::llround((hi - lo) / dt)) + 1;
    std::vector<double> out(n * a.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < a.dim(); ++c)
            out[i * a.dim() + c] = a.value(ia + i, c) + b.value(ib + i, c);
    Domain dom = (lo - 0.5 * dt < -1e-9 * dt) ? Domain::FullLine : Domain::HalfLine;
    return GridFunction(a.t_at(ia), dt, a.dim(), std::move(out), dom);
}

} // namespace weylkit
