// Gauss-Legendre panels and the principal-value Hilbert transform used by
// the half-line splitters. Nodes come from the Golub-Welsch eigenproblem so
// Eigen is the only dependency.
#pragma once

#include "rhfact/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numbers>
#include <vector>

namespace rhfact {

template <typename Real>
struct GaussLegendre {
    RealArray<Real> x;  // nodes on [-1, 1]
    RealArray<Real> w;  // weights summing to 2
};

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the Legendre
// recurrence, weights 2 * (first eigenvector component)^2.
template <typename Real>
GaussLegendre<Real> gauss_legendre(int n) {
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> J =
        Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const Real b = Real(k) / std::sqrt(Real(4 * k * k - 1));
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<
        Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>>
        es(J);
    GaussLegendre<Real> gl;
    gl.x = es.eigenvalues().array();
    gl.w = Real(2) * es.eigenvectors().row(0).array().square().transpose();
    return gl;
}

template <typename Real, typename F>
auto gl_panel(const GaussLegendre<Real>& gl, F&& f, Real a, Real b)
    -> decltype(f(Real(0)) * Real(1)) {
    const Real mid = Real(0.5) * (a + b), rad = Real(0.5) * (b - a);
    decltype(f(Real(0)) * Real(1)) acc{};
    for (Index i = 0; i < gl.x.size(); ++i)
        acc += gl.w[i] * f(mid + rad * gl.x[i]);
    return acc * rad;
}

struct HilbertOptions {
    double reach = 1e8;            // truncate the Cauchy integral at |t| = reach
    double central_halfwidth = 0.5;  // singularity panel half-width
    double panel_ratio = 2.0;        // geometric growth of panel edges
    int nodes = 16;                  // Gauss-Legendre nodes per panel
};

// (1/pi) p.v. int_{-T}^{T} f(t) / (lam - t) dt for f given as a callable on
// the real line. The mesh is refined geometrically around both the
// singularity at lam and the origin (where the integrands of interest have
// their own structure); the singular panel integrates the smooth difference
// quotient (f(t) - f(lam))/(lam - t), whose principal value over a symmetric
// interval drops the f(lam) term exactly.
template <typename Real, typename F>
Complex<Real> hilbert_pv(F&& f, Real lam, const HilbertOptions& opt,
                         const GaussLegendre<Real>& gl) {
    const Real T = Real(opt.reach);
    const Real d = Real(opt.central_halfwidth);
    const Real ratio = Real(opt.panel_ratio);

    const Complex<Real> flam = f(lam);
    Complex<Real> acc = gl_panel(
        gl,
        [&](Real t) {
            const Real dt = lam - t;
            if (dt == Real(0)) return -Complex<Real>(0);  // GL never lands here
            return (f(t) - flam) / dt;
        },
        lam - d, lam + d);

    // breakpoints graded from the singularity and from the origin
    std::vector<Real> bps{-T, T, lam - d, lam + d};
    for (Real a = d; a < T; a *= ratio) {
        const Real edges[6] = {lam - a * ratio, lam + a * ratio,
                               -a * ratio,      a * ratio,
                               -a,              a};
        for (Real p : edges)
            if (p > -T && p < T) bps.push_back(p);
    }
    std::sort(bps.begin(), bps.end());
    auto kernel = [&](Real t) { return f(t) / (lam - t); };
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        Real lo = bps[i], hi = bps[i + 1];
        // clip against the singular panel, already integrated above
        if (lo < lam - d && hi > lam - d) hi = lam - d;
        if (hi > lam + d && lo < lam + d) lo = lam + d;
        if (hi <= lo || (lo >= lam - d && hi <= lam + d)) continue;
        acc += gl_panel(gl, kernel, lo, hi);
    }
    return acc / std::numbers::pi_v<Real>;
}

// Trapezoid rule on a uniform grid.
template <typename Real>
Real trapezoid_uniform(const RealArray<Real>& y, Real dx) {
    if (y.size() < 2) return Real(0);
    Real s = Real(0.5) * (y[0] + y[y.size() - 1]);
    for (Index i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * dx;
}

}  // namespace rhfact
