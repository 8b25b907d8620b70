// Multiplicative factorization f = Phi_plus * Phi_minus through the additive
// split of a continuous logarithm: unwrap log f along the grid, peel off the
// constant, split the rest across the half-lines, exponentiate.
#pragma once

#include "rhfact/additive.hpp"
#include "rhfact/types.hpp"

#include <numbers>
#include <optional>

namespace rhfact {

template <typename Real>
struct LogBranch {
    ComplexArray<Real> values;
    Real winding_accumulated = Real(0);  // total argument increment over the grid
};

// Continuous branch of log f along the grid, phase continued from the left
// endpoint. Fails if |f| passes too close to zero (perturb and retry) or if
// adjacent phase increments reach pi (refine the grid).
template <typename Real>
LogBranch<Real> continuous_log(const SampledFunction<Real>& f,
                               Real tol_zero = Real(0)) {
    const Index m = f.size();
    if (tol_zero <= Real(0)) tol_zero = Real(1e-12) * max_abs(f);
    Real min_abs = std::numeric_limits<Real>::max();
    for (Index i = 0; i < m; ++i) min_abs = std::min(min_abs, std::abs(f.values[i]));
    if (!(min_abs > tol_zero))
        throw ZeroCrossingError(
            "continuous_log: |f| not bounded away from zero; "
            "perturb with epsilon > 0 and retry",
            double(min_abs));

    LogBranch<Real> out;
    out.values.resize(m);
    Real phase = std::arg(f.values[0]);
    out.values[0] = Complex<Real>(std::log(std::abs(f.values[0])), phase);
    for (Index i = 1; i < m; ++i) {
        const Real dphi = std::arg(f.values[i] / f.values[i - 1]);
        if (std::abs(dphi) >= std::numbers::pi_v<Real> - Real(1e-9))
            throw GridTooCoarseError(
                "continuous_log: adjacent phase jump reached pi; grid too coarse");
        phase += dphi;
        out.values[i] = Complex<Real>(std::log(std::abs(f.values[i])), phase);
    }
    out.winding_accumulated = phase - out.values[0].imag();
    return out;
}

template <typename Real>
SampledFunction<Real> perturb_epsilon(const SampledFunction<Real>& f,
                                      Real epsilon) {
    if (!(epsilon > Real(0)))
        throw std::invalid_argument("perturb_epsilon: epsilon must be > 0");
    return SampledFunction<Real>(f.grid, f.values + Complex<Real>(epsilon, 0));
}

// Lipschitz propagation of an additive-stage error through exp: on a region
// where |Re| <= m_bound, |exp(x) - exp(y)| <= exp(m_bound) |x - y|.
template <typename Real>
Real error_propagation_bound(Real g_error, Real m_bound) {
    return std::exp(m_bound) * g_error;
}

template <typename Real>
struct FactorizationResult {
    SampledFunction<Real> phi_plus;
    SampledFunction<Real> phi_minus;
    SampledFunction<Real> g_plus;
    SampledFunction<Real> g_minus;
    Complex<Real> const_lambda{0, 0};
    Real epsilon_used = Real(0);
    Complex<Real> normalization_factor{1, 0};
    Real product_residual = Real(0);
    Real winding = Real(0);
};

struct FactorizeOptions {
    double tol_residual = 1e-6;
    double epsilon = 0.0;       // added to f before taking the log
    bool auto_epsilon = true;   // on zero-crossing retry with 1e-3 * max|f|
    bool normalize_at_zero = false;
};

template <typename Real>
FactorizationResult<Real> factorize_multiplicative(
    const SampledFunction<Real>& f, const FactorizeOptions& opt = {}) {
    Real eps = Real(opt.epsilon);
    SampledFunction<Real> ft =
        eps > Real(0) ? perturb_epsilon(f, eps) : f;

    std::optional<LogBranch<Real>> lb;
    try {
        lb = continuous_log(ft);
    } catch (const ZeroCrossingError&) {
        if (!opt.auto_epsilon || eps > Real(0)) throw;
        eps = Real(1e-3) * max_abs(f);
        ft = perturb_epsilon(f, eps);
        lb = continuous_log(ft);
    }

    // The additive constant: log f tends to the same limit at both ends for
    // winding-free input; the mean of the two endpoint values keeps it real
    // for Hermitian-symmetric f.
    const Index m = ft.size();
    const Complex<Real> lambda0 =
        (lb->values[0] + lb->values[m - 1]) / Real(2);

    SampledFunction<Real> g(ft.grid, lb->values - lambda0);
    const AdditiveSplit<Real> split =
        split_additive_spectral(g, SplitOptions{opt.tol_residual});

    FactorizationResult<Real> out;
    out.g_plus = split.f_plus;
    out.g_minus = split.f_minus;
    out.const_lambda = lambda0;
    out.epsilon_used = eps;
    out.winding = lb->winding_accumulated;
    out.phi_plus = SampledFunction<Real>(
        ft.grid, (split.f_plus.values + lambda0 / Real(2)).exp());
    out.phi_minus = SampledFunction<Real>(
        ft.grid, (split.f_minus.values + lambda0 / Real(2)).exp());

    if (opt.normalize_at_zero) {
        const Complex<Real> u = out.phi_plus.at_zero();
        out.normalization_factor = u;
        out.phi_plus.values /= u;
        out.phi_minus.values *= u;
    }

    out.product_residual = max_abs<Real>(
        out.phi_plus.values * out.phi_minus.values - ft.values);
    if (out.product_residual > Real(opt.tol_residual))
        throw ResidualError("factorize_multiplicative: product residual",
                            double(out.product_residual), opt.tol_residual);
    return out;
}

}  // namespace rhfact
