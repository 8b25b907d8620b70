// Shannon-Whittaker cardinal series: interpolation from uniform samples,
// the aliasing error bound, and the cardinal-series evaluation of Dawson's
// integral from shifted Gaussians.
#pragma once

#include "rhfact/types.hpp"

#include <numbers>

namespace rhfact {

template <typename Real>
Real sinc(Real t) {
    if (std::abs(t) < Real(1e-8)) return Real(1) - t * t / Real(6);
    return std::sin(t) / t;
}

// Symmetric partial sum of the cardinal series,
//   sum_{|n|<=n_terms} f(nh) sinc(pi (x - nh)/h).
// Reproduces the samples exactly at grid nodes.
template <typename Real>
Complex<Real> cardinal_interpolate(const SampledFunction<Real>& f, Real x,
                                   Index n_terms) {
    if (n_terms > f.grid.n_half)
        throw std::invalid_argument(
            "cardinal_interpolate: n_terms exceeds n_half");
    const Real h = f.grid.h;
    const Real pi_over_h = std::numbers::pi_v<Real> / h;
    const Index c = f.grid.center();
    Complex<Real> acc(0, 0);
    for (Index n = -n_terms; n <= n_terms; ++n) {
        const Real t = pi_over_h * (x - Real(n) * h);
        acc += f.values[c + n] * sinc(t);
    }
    return acc;
}

template <typename Real>
struct TruncationBound {
    Real value = Real(0);        // (1/pi) int_{|w| >= pi/h} |F|
    bool covers_cutoff = false;  // grid reaches pi/h; bound unreliable if not
};

// Aliasing bound for the cardinal series at sample spacing h:
// (1/pi) int_{|w| >= pi/h} |F(w)| dw, by trapezoid quadrature on F's grid
// plus an optional analytic bound for the mass beyond the grid's coverage.
// The boundary cell containing pi/h is split by linear interpolation of |F|.
template <typename Real>
TruncationBound<Real> truncation_error_bound(const SpectralFunction<Real>& F,
                                             Real h,
                                             Real analytic_tail = Real(0)) {
    if (!(h > Real(0)))
        throw std::invalid_argument("truncation_error_bound: h <= 0");
    const Real cutoff = std::numbers::pi_v<Real> / h;
    TruncationBound<Real> out;
    out.covers_cutoff = F.omega_max() >= cutoff;

    Real integral = Real(0);
    // one-sided pass over [cutoff, omega_max] applied to both half-lines
    for (int side = 0; side < 2; ++side) {
        for (Index i = 0; i + 1 < F.size(); ++i) {
            Real a = F.omega(i), b = F.omega(i + 1);
            Real fa = std::abs(F.values[i]), fb = std::abs(F.values[i + 1]);
            if (side == 1) {
                a = -a;
                b = -b;
                std::swap(a, b);
                std::swap(fa, fb);
            }
            // now [a, b] with values fa, fb; keep the part with w >= cutoff
            if (b <= cutoff) continue;
            if (a < cutoff) {
                const Real t = (cutoff - a) / (b - a);
                fa = fa + t * (fb - fa);
                a = cutoff;
            }
            integral += Real(0.5) * (fa + fb) * (b - a);
        }
    }
    out.value = (integral + analytic_tail) / std::numbers::pi_v<Real>;
    return out;
}

// Partial sum of the shifted-Gaussian cardinal series for Dawson's integral,
//   (1/sqrt(pi)) sum_{n odd, |n| <= n_terms} exp(-(z - nh)^2) / n,
// which converges to F(z) as h -> 0+, n_terms -> inf.
template <typename Real>
Complex<Real> dawson_via_cardinal(Complex<Real> z, Real h, Index n_terms) {
    if (!(h > Real(0)) || n_terms < 1)
        throw std::invalid_argument("dawson_via_cardinal: need h > 0, n_terms >= 1");
    // |exp(-(z-nh)^2)| = exp(Im(z)^2 - (Re(z)-nh)^2); guard the largest term
    Real min_sq = std::numeric_limits<Real>::max();
    for (Index n = -n_terms; n <= n_terms; ++n) {
        if (n % 2 == 0) continue;
        const Real d = z.real() - Real(n) * h;
        min_sq = std::min(min_sq, d * d);
    }
    if (z.imag() * z.imag() - min_sq > Real(700))
        throw std::overflow_error(
            "dawson_via_cardinal: exp overflow, |Im z| too large for n_terms*h");
    Complex<Real> acc(0, 0);
    for (Index n = -n_terms; n <= n_terms; ++n) {
        if (n % 2 == 0) continue;
        const Complex<Real> d = z - Real(n) * h;
        acc += std::exp(-d * d) / Real(n);
    }
    return acc / std::sqrt(std::numbers::pi_v<Real>);
}

// Reference Dawson F(z): Maclaurin series for small |z|, otherwise the
// continued fraction F(z) = z/(1+) 2z^2/(3+) -4z^2/(5+) 6z^2/(7+) ...
// evaluated by the modified Lentz scheme.
template <typename Real>
Complex<Real> dawson_reference(Complex<Real> z) {
    const Real az = std::abs(z);
    if (az < Real(2.5)) {
        // F = sum_k (-1)^k 2^k z^{2k+1} / (2k+1)!!
        Complex<Real> term = z, acc = z;
        const Complex<Real> z2 = z * z;
        for (int k = 0; k < 200; ++k) {
            term *= Real(-2) * z2 / Real(2 * k + 3);
            acc += term;
            if (std::abs(term) < Real(1e-18) * (Real(1) + std::abs(acc)))
                break;
        }
        return acc;
    }
    const Real tiny = Real(1e-200);
    const Complex<Real> z2 = z * z;
    Complex<Real> f(tiny, 0), C = f, D(0, 0);
    // b_1 = 1, a_1 = z; b_k = 2k-1, a_k = (-1)^k (2k-2) z^2 for k >= 2
    for (int k = 1; k <= 300; ++k) {
        const Complex<Real> a =
            (k == 1) ? z : Complex<Real>(Real((k % 2 == 0) ? 1 : -1) *
                                         Real(2 * k - 2)) * z2;
        const Complex<Real> b(Real(2 * k - 1), 0);
        D = b + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = Real(1) / D;
        const Complex<Real> delta = C * D;
        f *= delta;
        if (std::abs(delta - Real(1)) < Real(1e-16)) break;
    }
    return f;
}

}  // namespace rhfact
