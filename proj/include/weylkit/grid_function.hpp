#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace weylkit {

enum class Domain { HalfLine, FullLine };

/**
 * Uniformly sampled vector-valued function of one real variable.
 *
 * Samples live at t_i = t0 + i*dt, i = 0..size()-1, and are interpreted as
 * the value of the function on the cell [t_i - dt/2, t_i + dt/2].  All
 * integral functionals in this library (window averages, convolutions,
 * seminorms) use the induced midpoint rule, which is exact for piecewise
 * constant data aligned with the cell boundaries.  Routines that combine two
 * grids require the cell-boundary lattices to agree and raise a grid error
 * otherwise; nothing here ever resamples silently.
 *
 * Storage is row-major: component c of sample i sits at values()[i*dim + c].
 */
class GridFunction {
public:
    GridFunction(double t0, double dt, std::size_t dim, std::vector<double> samples,
                 Domain domain = Domain::HalfLine);

    static GridFunction zeros(double t0, double dt, std::size_t n, std::size_t dim,
                              Domain domain = Domain::HalfLine);

    double t0() const { return t0_; }
    double dt() const { return dt_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return data_.size() / dim_; }
    Domain domain() const { return domain_; }

    // Time of sample i and of the last sample.
    double t_at(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }
    double t_end() const { return t_at(size() - 1); }

    // Left edge of the first cell / right edge of the last cell.
    double cell_start() const { return t0_ - 0.5 * dt_; }
    double cell_end() const { return t_end() + 0.5 * dt_; }

    double value(std::size_t i, std::size_t c = 0) const { return data_[i * dim_ + c]; }
    double& value(std::size_t i, std::size_t c = 0) { return data_[i * dim_ + c]; }

    // Euclidean norm of sample i across components.
    double norm_at(std::size_t i) const;

    // Largest Euclidean sample norm.
    double sup_norm() const;

    // Index of the sample whose cell contains t (ties at a cell boundary go
    // to the right cell).  Throws std::out_of_range for t outside the span.
    std::size_t index_of(double t) const;

    // True when t sits on the cell-boundary lattice within tol*dt.
    bool on_boundary_lattice(double t, double tol = 1e-9) const;

    const std::vector<double>& values() const { return data_; }
    std::vector<double>& values() { return data_; }

    GridFunction slice(std::size_t first, std::size_t count) const;

    // Pointwise difference; grids must coincide exactly in t0, dt, dim.
    friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator+(const GridFunction& a, const GridFunction& b);

private:
    double t0_;
    double dt_;
    std::size_t dim_;
    std::vector<double> data_;
    Domain domain_;
};

// Sum f+g restricted to the overlap of their spans.  Cell lattices must
// agree modulo dt; throws std::invalid_argument otherwise or when the
// overlap is empty.
GridFunction add_on_overlap(const GridFunction& a, const GridFunction& b);

} // namespace weylkit
