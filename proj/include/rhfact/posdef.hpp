// Positive definiteness via Gram ("Bochner") matrices and the Fejer spectral
// estimate. A function on R is positive definite iff every matrix
// [f(x_i - x_j)] is positive semi-definite iff its Fourier transform is
// non-negative; both views are measured and combined into one verdict.
#pragma once

#include "rhfact/cardinal.hpp"
#include "rhfact/fourier.hpp"
#include "rhfact/rng.hpp"
#include "rhfact/types.hpp"

#include <Eigen/Eigenvalues>

#include <functional>

namespace rhfact {

enum class PdVerdict { pd, not_pd, inconclusive };

inline const char* to_string(PdVerdict v) {
    switch (v) {
        case PdVerdict::pd: return "pd";
        case PdVerdict::not_pd: return "not_pd";
        default: return "inconclusive";
    }
}

template <typename Real>
struct PdReport {
    Real min_bochner_eigenvalue = Real(0);
    Real negative_spectral_mass = Real(0);
    Real total_spectral_mass = Real(0);
    Real max_asymmetry = Real(0);  // worst Gram-matrix Hermitian defect
    PdVerdict verdict = PdVerdict::inconclusive;
    Real tolerance_used = Real(0);
};

// Gram matrix M[i][j] = f(x_i - x_j) for a pointwise evaluator.
template <typename Real>
ComplexMatrix<Real> bochner_matrix(
    const std::function<Complex<Real>(Real)>& f, const RealArray<Real>& points) {
    const Index k = points.size();
    if (k < 1) throw std::invalid_argument("bochner_matrix: empty point set");
    ComplexMatrix<Real> m(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) m(i, j) = f(points[i] - points[j]);
    return m;
}

namespace detail {

// Evaluator backed by grid samples: exact node lookup when x lands on the
// grid, cardinal interpolation otherwise.
template <typename Real>
std::function<Complex<Real>(Real)> grid_evaluator(
    const SampledFunction<Real>& f) {
    return [&f](Real x) -> Complex<Real> {
        const Real extent = f.grid.extent();
        if (std::abs(x) > extent + Real(1e-9) * f.grid.h)
            throw std::domain_error(
                "bochner_matrix: point difference outside the sampled range");
        const Real idx = x / f.grid.h;
        const Real r = std::round(idx);
        if (std::abs(idx - r) < Real(1e-9)) {
            Index i = f.grid.center() + static_cast<Index>(r);
            i = std::max<Index>(0, std::min<Index>(f.size() - 1, i));
            return f.values[i];
        }
        return cardinal_interpolate(f, x, f.grid.n_half);
    };
}

template <typename Real>
Real min_eig_of_hermitian_part(const ComplexMatrix<Real>& m,
                               Real* asymmetry = nullptr) {
    ComplexMatrix<Real> herm = (m + m.adjoint()) / Real(2);
    if (asymmetry) {
        const ComplexMatrix<Real> skew = (m - m.adjoint()) / Real(2);
        *asymmetry = skew.cwiseAbs().maxCoeff();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(
        herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace detail

template <typename Real>
ComplexMatrix<Real> bochner_matrix(const SampledFunction<Real>& f,
                                   const RealArray<Real>& points) {
    return bochner_matrix<Real>(detail::grid_evaluator(f), points);
}

template <typename Real>
Real min_bochner_eigenvalue(const std::function<Complex<Real>(Real)>& f,
                            const RealArray<Real>& points) {
    return detail::min_eig_of_hermitian_part(bochner_matrix<Real>(f, points));
}

template <typename Real>
Real min_bochner_eigenvalue(const SampledFunction<Real>& f,
                            const RealArray<Real>& points) {
    return detail::min_eig_of_hermitian_part(bochner_matrix(f, points));
}

struct PdOptions {
    int point_sets = 8;
    int set_size = 12;
    double tol_rel = 1e-8;  // scales with max|f| (Gram) and total mass (spectral)
    std::uint64_t seed = 0x5eed;
};

// Dual-criterion positive-definiteness report. The spectral side uses the
// Fejer-weighted estimate (see fejer_spectrum), which is itself a Gram
// quadratic form and hence sign-exact for truly positive definite inputs;
// the Gram side draws point sets uniformly from [-extent/2, extent/2] so all
// pairwise differences stay on the grid.
template <typename Real>
PdReport<Real> pd_report(const SampledFunction<Real>& f,
                         const PdOptions& opt = {}) {
    if (!(opt.tol_rel > 0)) throw std::invalid_argument("pd_report: tol <= 0");
    PdReport<Real> rep;

    const SpectralFunction<Real> S = fejer_spectrum(f);
    rep.negative_spectral_mass = spectral_negative_mass(S);
    rep.total_spectral_mass = spectral_abs_mass(S);

    const Real half = f.grid.extent() / Real(2);
    Xoshiro256 rng(opt.seed);
    Real min_eig = std::numeric_limits<Real>::max();
    Real asym_max = Real(0);
    for (int s = 0; s < opt.point_sets; ++s) {
        RealArray<Real> pts(opt.set_size);
        for (int i = 0; i < opt.set_size; ++i)
            pts[i] = Real((2.0 * rng.uniform() - 1.0) * half);
        Real asym = Real(0);
        const Real e = detail::min_eig_of_hermitian_part(
            bochner_matrix(f, pts), &asym);
        min_eig = std::min(min_eig, e);
        asym_max = std::max(asym_max, asym);
    }
    rep.min_bochner_eigenvalue = min_eig;
    rep.max_asymmetry = asym_max;

    const Real scale = max_abs(f);
    const Real tol_eig = Real(opt.tol_rel) * std::max(scale, Real(1e-300));
    const Real tol_mass = Real(opt.tol_rel) * rep.total_spectral_mass;
    rep.tolerance_used = tol_eig;

    const bool eig_ok = min_eig >= -tol_eig;
    const bool mass_ok = rep.negative_spectral_mass <= tol_mass;
    if (eig_ok && mass_ok) {
        rep.verdict = PdVerdict::pd;
    } else if (min_eig >= -10 * tol_eig &&
               rep.negative_spectral_mass <= 10 * tol_mass) {
        rep.verdict = PdVerdict::inconclusive;
    } else {
        rep.verdict = PdVerdict::not_pd;
    }
    return rep;
}

}  // namespace rhfact
