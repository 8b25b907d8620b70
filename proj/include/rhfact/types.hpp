// Core grid/function carriers shared by every layer of the library.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace rhfact {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexArray = Eigen::Array<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealArray = Eigen::Array<Real, Eigen::Dynamic, 1>;

template <typename Real>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

// Thrown when a function value passes too close to zero for a log/branch
// operation; the usual remedy is an epsilon perturbation.
class ZeroCrossingError : public std::runtime_error {
public:
    ZeroCrossingError(const std::string& what, double min_abs)
        : std::runtime_error(what), min_abs_(min_abs) {}
    double min_abs() const { return min_abs_; }

private:
    double min_abs_;
};

// Adjacent-sample phase increments reached pi: the grid cannot resolve the
// argument of the input.
class GridTooCoarseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A residual check on a computed decomposition exceeded its tolerance.
class ResidualError : public std::runtime_error {
public:
    ResidualError(const std::string& what, double residual, double tol)
        : std::runtime_error(what), residual_(residual), tol_(tol) {}
    double residual() const { return residual_; }
    double tolerance() const { return tol_; }

private:
    double residual_;
    double tol_;
};

// Uniform symmetric grid x = k*h, k in [-n_half, n_half]. Odd point count so
// that x = 0 is always a sample.
template <typename Real>
struct Grid {
    Real h = Real(0.25);
    Index n_half = 512;

    Grid() = default;
    Grid(Real spacing, Index half) : h(spacing), n_half(half) {
        if (!(h > Real(0)))
            throw std::invalid_argument("Grid: spacing must be positive");
        if (n_half < 1)
            throw std::invalid_argument("Grid: n_half must be >= 1");
    }

    Index size() const { return 2 * n_half + 1; }
    Real point(Index i) const { return Real(i - n_half) * h; }
    Real extent() const { return Real(n_half) * h; }
    Index center() const { return n_half; }

    RealArray<Real> points() const {
        RealArray<Real> x(size());
        for (Index i = 0; i < size(); ++i) x[i] = point(i);
        return x;
    }

    bool operator==(const Grid& o) const {
        return h == o.h && n_half == o.n_half;
    }
};

// Complex samples of a function on a Grid.
template <typename Real>
struct SampledFunction {
    Grid<Real> grid;
    ComplexArray<Real> values;

    SampledFunction() = default;
    SampledFunction(Grid<Real> g, ComplexArray<Real> v)
        : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument(
                "SampledFunction: value count does not match grid");
    }

    Complex<Real> at_node(Index i) const { return values[i]; }
    Complex<Real> at_zero() const { return values[grid.center()]; }
    Index size() const { return values.size(); }

    bool all_finite() const {
        for (Index i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i].real()) ||
                !std::isfinite(values[i].imag()))
                return false;
        return true;
    }
};

// Complex samples of a Fourier transform on a uniform symmetric frequency
// grid omega = k*d_omega, k in [-n_half, n_half].
template <typename Real>
struct SpectralFunction {
    Real d_omega = Real(0);
    Index n_half = 0;
    ComplexArray<Real> values;

    SpectralFunction() = default;
    SpectralFunction(Real spacing, Index half, ComplexArray<Real> v)
        : d_omega(spacing), n_half(half), values(std::move(v)) {
        if (!(d_omega > Real(0)))
            throw std::invalid_argument("SpectralFunction: spacing <= 0");
        if (values.size() != 2 * n_half + 1)
            throw std::invalid_argument(
                "SpectralFunction: value count does not match grid");
    }

    Index size() const { return values.size(); }
    Real omega(Index i) const { return Real(i - n_half) * d_omega; }
    Real omega_max() const { return Real(n_half) * d_omega; }
    Index center() const { return n_half; }

    bool all_finite() const {
        for (Index i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i].real()) ||
                !std::isfinite(values[i].imag()))
                return false;
        return true;
    }
};

// Evaluate a callable on every grid node.
template <typename Real, typename F>
SampledFunction<Real> sample(const Grid<Real>& g, F&& f) {
    ComplexArray<Real> v(g.size());
    for (Index i = 0; i < g.size(); ++i) v[i] = Complex<Real>(f(g.point(i)));
    return SampledFunction<Real>(g, std::move(v));
}

template <typename Real>
Real max_abs(const ComplexArray<Real>& v) {
    Real m = Real(0);
    for (Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

template <typename Real>
Real max_abs(const SampledFunction<Real>& f) {
    return max_abs(f.values);
}

// sup_x |f(-x) - conj(f(x))|, zero for any characteristic function.
template <typename Real>
Real hermitian_defect(const SampledFunction<Real>& f) {
    const Index m = f.size();
    Real d = Real(0);
    for (Index i = 0; i < m; ++i)
        d = std::max(d, std::abs(f.values[m - 1 - i] - std::conj(f.values[i])));
    return d;
}

}  // namespace rhfact
