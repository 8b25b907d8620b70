// Discrete approximation of the continuous Fourier transform pair
//
//   F(w) = int f(x) e^{-iwx} dx,      f(x) = (1/2pi) int F(w) e^{iwx} dw
//
// on the centered grid x = n h, |n| <= N. The induced frequency grid is
// w = k dw with dw = 2 pi / ((2N+1) h), so the sample spacing in one domain
// fixes the coverage of the other. Quadrature weight is a uniform h: the
// samples are treated as a window onto an infinite-grid trapezoid sum, which
// makes the discrete pair an exact inverse of each other on the grid
// (sum_k e^{2 pi i k (m-n) / M} = M delta_{mn} for |m-n| < M).
#pragma once

#include "rhfact/types.hpp"

#include <numbers>
#include <vector>

namespace rhfact {

namespace detail {

// Powers of the M-th root of unity, exp(-2 pi i j / M) for j in [0, M).
template <typename Real>
std::vector<Complex<Real>> root_table(Index m) {
    std::vector<Complex<Real>> w(static_cast<size_t>(m));
    const Real step = Real(-2) * std::numbers::pi_v<Real> / Real(m);
    for (Index j = 0; j < m; ++j)
        w[static_cast<size_t>(j)] =
            Complex<Real>(std::cos(step * Real(j)), std::sin(step * Real(j)));
    return w;
}

// Centered DFT: out_k = sum_n v_n exp(sign * 2 pi i k n / M), k,n in [-N,N].
template <typename Real>
ComplexArray<Real> centered_dft(const ComplexArray<Real>& v, int sign) {
    const Index m = v.size();
    const Index n_half = (m - 1) / 2;
    const auto w = root_table<Real>(m);
    ComplexArray<Real> out(m);
    for (Index ki = 0; ki < m; ++ki) {
        const long long k = ki - n_half;
        Complex<Real> acc(0, 0);
        for (Index ni = 0; ni < m; ++ni) {
            const long long n = ni - n_half;
            long long j = (-sign * k * n) % m;
            if (j < 0) j += m;
            acc += v[ni] * w[static_cast<size_t>(j)];
        }
        out[ki] = acc;
    }
    return out;
}

}  // namespace detail

template <typename Real>
SpectralFunction<Real> forward_ft(const SampledFunction<Real>& f) {
    if (!f.all_finite())
        throw std::invalid_argument("forward_ft: non-finite input values");
    const Index m = f.size();
    const Real d_omega =
        Real(2) * std::numbers::pi_v<Real> / (Real(m) * f.grid.h);
    ComplexArray<Real> v = detail::centered_dft(f.values, -1);
    v *= f.grid.h;
    return SpectralFunction<Real>(d_omega, f.grid.n_half, std::move(v));
}

template <typename Real>
SampledFunction<Real> inverse_ft(const SpectralFunction<Real>& F) {
    if (!F.all_finite())
        throw std::invalid_argument("inverse_ft: non-finite input values");
    const Index m = F.size();
    const Real h = Real(2) * std::numbers::pi_v<Real> / (Real(m) * F.d_omega);
    ComplexArray<Real> v = detail::centered_dft(F.values, +1);
    v *= F.d_omega / (Real(2) * std::numbers::pi_v<Real>);
    return SampledFunction<Real>(Grid<Real>(h, F.n_half), std::move(v));
}

template <typename Real>
Real roundtrip_residual(const SampledFunction<Real>& f) {
    const SampledFunction<Real> back = inverse_ft(forward_ft(f));
    return max_abs<Real>(back.values - f.values);
}

// Bartlett/Fejer-weighted spectral estimate,
//
//   S(w) = h sum_{|n|<=N} (1 - |n|/(N+1)) f(nh) e^{-iw nh}.
//
// Writing the triangle as an autocorrelation of a rectangle turns S(w) into
// the quadratic form (h/(N+1)) v* [f(x_a - x_b)] v with v_a = e^{iw a h}, so
// S(w) >= 0 whenever all Gram matrices [f(x_a - x_b)] are positive
// semi-definite, no matter how slowly f decays. A negative value is a
// certificate of a Gram-matrix violation. Used by the positive-definiteness
// diagnostics; the untapered forward_ft stays the transform of record.
template <typename Real>
SpectralFunction<Real> fejer_spectrum(const SampledFunction<Real>& f) {
    if (!f.all_finite())
        throw std::invalid_argument("fejer_spectrum: non-finite input values");
    const Index m = f.size();
    const Index n_half = f.grid.n_half;
    ComplexArray<Real> tapered(m);
    for (Index i = 0; i < m; ++i) {
        const Real taper =
            Real(1) - Real(std::abs(i - n_half)) / Real(n_half + 1);
        tapered[i] = f.values[i] * taper;
    }
    const Real d_omega =
        Real(2) * std::numbers::pi_v<Real> / (Real(m) * f.grid.h);
    ComplexArray<Real> v = detail::centered_dft(tapered, -1);
    v *= f.grid.h;
    return SpectralFunction<Real>(d_omega, n_half, std::move(v));
}

// Trapezoid integral of |F| over the whole frequency grid.
template <typename Real>
Real spectral_abs_mass(const SpectralFunction<Real>& F) {
    Real s = Real(0);
    for (Index i = 0; i < F.size(); ++i) {
        const Real w =
            (i == 0 || i == F.size() - 1) ? Real(0.5) : Real(1);
        s += w * std::abs(F.values[i]);
    }
    return s * F.d_omega;
}

// Trapezoid integral of max(0, -Re F) over the grid.
template <typename Real>
Real spectral_negative_mass(const SpectralFunction<Real>& F) {
    Real s = Real(0);
    for (Index i = 0; i < F.size(); ++i) {
        const Real w =
            (i == 0 || i == F.size() - 1) ? Real(0.5) : Real(1);
        s += w * std::max(Real(0), -F.values[i].real());
    }
    return s * F.d_omega;
}

}  // namespace rhfact
