// Levy models with finite-activity jumps: characteristic exponents, killed
// characteristic functions, winding/index diagnostics and the fractional
// power checks they support.
#pragma once

#include "rhfact/posdef.hpp"
#include "rhfact/types.hpp"

#include <numbers>

namespace rhfact {

enum class JumpKind { none, gaussian, exponential_twosided };

// Compound-Poisson jump component. For gaussian: jump law N(mean, stddev^2).
// For exponential_twosided: +Exp(theta_plus) with probability p, -Exp(theta_minus)
// with probability 1-p.
template <typename Real>
struct JumpSpec {
    JumpKind kind = JumpKind::none;
    Real intensity = Real(0);  // eta
    Real mean = Real(0);
    Real stddev = Real(1);
    Real p = Real(0.5);
    Real theta_plus = Real(1);
    Real theta_minus = Real(1);
};

template <typename Real>
struct LevyModel {
    Real mu = Real(0);     // drift
    Real sigma = Real(1);  // volatility
    JumpSpec<Real> jumps;

    static LevyModel brownian(Real mu, Real sigma) {
        LevyModel m;
        m.mu = mu;
        m.sigma = sigma;
        return m;
    }

    static LevyModel jump_diffusion_gaussian(Real mu, Real sigma, Real eta,
                                             Real jump_mean, Real jump_sd) {
        LevyModel m;
        m.mu = mu;
        m.sigma = sigma;
        m.jumps.kind = JumpKind::gaussian;
        m.jumps.intensity = eta;
        m.jumps.mean = jump_mean;
        m.jumps.stddev = jump_sd;
        return m;
    }

    static LevyModel jump_diffusion_twosided_exp(Real mu, Real sigma, Real eta,
                                                 Real p, Real theta_plus,
                                                 Real theta_minus) {
        LevyModel m;
        m.mu = mu;
        m.sigma = sigma;
        m.jumps.kind = JumpKind::exponential_twosided;
        m.jumps.intensity = eta;
        m.jumps.p = p;
        m.jumps.theta_plus = theta_plus;
        m.jumps.theta_minus = theta_minus;
        return m;
    }

    void validate() const {
        if (!(sigma >= Real(0)))
            throw std::invalid_argument("LevyModel: sigma must be >= 0");
        if (jumps.kind != JumpKind::none && !(jumps.intensity > Real(0)))
            throw std::invalid_argument("LevyModel: jump intensity must be > 0");
        if (jumps.kind == JumpKind::gaussian && !(jumps.stddev > Real(0)))
            throw std::invalid_argument("LevyModel: jump stddev must be > 0");
        if (jumps.kind == JumpKind::exponential_twosided) {
            if (!(jumps.theta_plus > Real(0)) || !(jumps.theta_minus > Real(0)))
                throw std::invalid_argument("LevyModel: jump rates must be > 0");
            if (jumps.p < Real(0) || jumps.p > Real(1))
                throw std::invalid_argument("LevyModel: jump-sign probability");
        }
    }
};

template <typename Real>
struct KillingTime {
    enum class Kind { exponential, geometric } kind = Kind::exponential;
    Real q = Real(1);

    static KillingTime exponential(Real q) {
        if (!(q > Real(0)))
            throw std::invalid_argument("KillingTime: exponential needs q > 0");
        return KillingTime{Kind::exponential, q};
    }
    static KillingTime geometric(Real q) {
        if (!(q > Real(0)) || !(q < Real(1)))
            throw std::invalid_argument("KillingTime: geometric needs 0 < q < 1");
        return KillingTime{Kind::geometric, q};
    }
};

// E[exp(i lam J)] of one jump.
template <typename Real>
Complex<Real> jump_cf(const JumpSpec<Real>& j, Real lam) {
    switch (j.kind) {
        case JumpKind::none:
            return Complex<Real>(1, 0);
        case JumpKind::gaussian:
            return std::exp(Complex<Real>(-Real(0.5) * j.stddev * j.stddev *
                                              lam * lam,
                                          j.mean * lam));
        case JumpKind::exponential_twosided: {
            const Complex<Real> ilam(0, lam);
            return j.p * j.theta_plus / (j.theta_plus - ilam) +
                   (Real(1) - j.p) * j.theta_minus / (j.theta_minus + ilam);
        }
    }
    return Complex<Real>(1, 0);
}

// Characteristic exponent: E[exp(i lam X_t)] = exp(-t psi(lam)). For
// finite-activity jumps the compensator is absorbed into the drift, so
//   psi(lam) = sigma^2 lam^2 / 2 - i mu lam + eta (1 - E[exp(i lam J)]).
// psi(0) = 0 and Re psi >= 0.
template <typename Real>
Complex<Real> psi_eval(const LevyModel<Real>& model, Real lam) {
    const Complex<Real> base(Real(0.5) * model.sigma * model.sigma * lam * lam,
                             -model.mu * lam);
    if (model.jumps.kind == JumpKind::none) return base;
    return base +
           model.jumps.intensity * (Real(1) - jump_cf(model.jumps, lam));
}

// Characteristic function of X at an independent Exponential(q) time:
// q / (q + psi).
template <typename Real>
SampledFunction<Real> char_fn_exp_time(const LevyModel<Real>& model, Real q,
                                       const Grid<Real>& grid) {
    if (!(q > Real(0)))
        throw std::invalid_argument("char_fn_exp_time: q must be > 0");
    model.validate();
    return sample(grid, [&](Real lam) {
        return Complex<Real>(q, 0) / (q + psi_eval(model, lam));
    });
}

// Characteristic function of X at an independent Geometric(q) time with unit
// steps: (1 - q) / (1 - q phi), phi = exp(-t_step psi). Satisfies
// 1 - q < |f| <= 1.
template <typename Real>
SampledFunction<Real> char_fn_geom_time(const LevyModel<Real>& model, Real q,
                                        const Grid<Real>& grid,
                                        Real t_step = Real(1)) {
    if (!(q > Real(0)) || !(q < Real(1)))
        throw std::invalid_argument("char_fn_geom_time: need 0 < q < 1");
    model.validate();
    return sample(grid, [&](Real lam) {
        const Complex<Real> phi = std::exp(-t_step * psi_eval(model, lam));
        return (Real(1) - q) / (Real(1) - q * phi);
    });
}

template <typename Real>
struct WindingResult {
    int index = 0;
    Real raw = Real(0);  // accumulated argument / 2 pi before rounding
    Real min_abs = Real(0);
};

// Winding number of f + offset along the grid, closed through the point at
// infinity by the shortest rotation from the right end value back to the
// left end value.
template <typename Real>
WindingResult<Real> winding_index(const SampledFunction<Real>& f,
                                  Complex<Real> offset,
                                  Real tol_zero = Real(1e-12)) {
    const Index m = f.size();
    WindingResult<Real> out;
    Real min_abs = std::numeric_limits<Real>::max();
    Real total = Real(0);
    Complex<Real> prev = f.values[0] + offset;
    min_abs = std::min(min_abs, std::abs(prev));
    for (Index i = 1; i < m; ++i) {
        const Complex<Real> cur = f.values[i] + offset;
        min_abs = std::min(min_abs, std::abs(cur));
        total += std::arg(cur / prev);
        prev = cur;
    }
    // closure through infinity
    total += std::arg((f.values[0] + offset) / prev);
    out.min_abs = min_abs;
    if (!(min_abs > tol_zero))
        throw ZeroCrossingError("winding_index: curve passes near zero",
                                double(min_abs));
    out.raw = total / (Real(2) * std::numbers::pi_v<Real>);
    out.index = static_cast<int>(std::lround(double(out.raw)));
    return out;
}

template <typename Real>
struct BetaPowerResult {
    PdReport<Real> report;
    Real identity_max_error = Real(0);  // gamma-integral cross-check
    SampledFunction<Real> power;
};

namespace detail {

// (q/(q+psi))^beta via the gamma identity
//   int_0^inf x^{beta-1} e^{-x} / Gamma(beta) exp(-(x/q) psi) dx
// with x = v^p, p = max(2, ceil(1/beta)), trapezoid in v. Re psi >= 0 keeps
// the integrand dominated by exp(-v^p).
template <typename Real>
Complex<Real> beta_power_gamma_integral(Complex<Real> psi, Real q, Real beta) {
    const int p = std::max(2, int(std::ceil(1.0 / double(beta))));
    const Real dv = Real(5e-4);
    const Real vmax = Real(9);
    Complex<Real> acc(0, 0);
    const Real expo = Real(p) * beta - Real(1);
    for (Real v = dv; v < vmax; v += dv) {
        const Real x = std::pow(v, Real(p));
        const Complex<Real> term =
            Real(p) * std::pow(v, expo) *
            std::exp(Complex<Real>(-x, 0) - (x / q) * psi);
        acc += term;
    }
    // v = 0 endpoint: nonzero only when p*beta = 1
    if (std::abs(expo) < Real(1e-14)) acc += Real(0.5) * Real(p);
    acc *= dv;
    return acc / std::tgamma(beta);
}

}  // namespace detail

// (q/(q+psi))^beta by principal power (the base curve stays in the right
// half-plane), cross-checked against the gamma-integral identity at five
// interior grid points, then assessed for positive definiteness.
template <typename Real>
BetaPowerResult<Real> beta_power_check(const LevyModel<Real>& model, Real q,
                                       Real beta, const Grid<Real>& grid,
                                       const PdOptions& pd_opt = {}) {
    if (!(beta > Real(0)))
        throw std::invalid_argument("beta_power_check: beta must be > 0");
    model.validate();
    BetaPowerResult<Real> out;
    out.power = sample(grid, [&](Real lam) {
        const Complex<Real> w = Complex<Real>(q, 0) / (q + psi_eval(model, lam));
        return std::pow(w, Complex<Real>(beta, 0));
    });

    const Real checks[5] = {Real(0.5), Real(1), Real(2), Real(5), Real(10)};
    Real err = Real(0);
    for (Real lam_target : checks) {
        const Index i =
            grid.center() + Index(std::lround(double(lam_target / grid.h)));
        const Real lam = grid.point(i);
        const Complex<Real> direct = out.power.values[i];
        const Complex<Real> viaint =
            detail::beta_power_gamma_integral(psi_eval(model, lam), q, beta);
        err = std::max(err, std::abs(direct - viaint));
    }
    out.identity_max_error = err;
    if (err > Real(1e-6))
        throw ResidualError("beta_power_check: gamma-integral identity",
                            double(err), 1e-6);
    out.report = pd_report(out.power, pd_opt);
    return out;
}

template <typename Real>
struct NormBounds {
    Real l1 = Real(0);
    Real l2_squared = Real(0);
    Real l1_bound = Real(0);
    Real l2_bound = Real(0);
};

// Grid L1/L2 norms of phi_t = exp(-t psi) against the Gaussian-part bounds
// sqrt(2 pi)/(sigma sqrt(t)) and sqrt(pi)/(sigma sqrt(t)).
template <typename Real>
NormBounds<Real> l1_l2_bounds_check(const LevyModel<Real>& model, Real t,
                                    const Grid<Real>& grid) {
    if (!(model.sigma > Real(0)) || !(t > Real(0)))
        throw std::invalid_argument("l1_l2_bounds_check: need sigma > 0, t > 0");
    model.validate();
    NormBounds<Real> out;
    RealArray<Real> a1(grid.size()), a2(grid.size());
    for (Index i = 0; i < grid.size(); ++i) {
        const Real m = std::abs(std::exp(-t * psi_eval(model, grid.point(i))));
        a1[i] = m;
        a2[i] = m * m;
    }
    out.l1 = trapezoid_uniform(a1, grid.h);
    out.l2_squared = trapezoid_uniform(a2, grid.h);
    const Real st = model.sigma * std::sqrt(t);
    out.l1_bound = std::sqrt(Real(2) * std::numbers::pi_v<Real>) / st;
    out.l2_bound = std::sqrt(std::numbers::pi_v<Real>) / st;
    const Real slack = Real(1e-9);
    if (out.l1 > out.l1_bound * (Real(1) + slack))
        throw ResidualError("l1_l2_bounds_check: L1 bound violated",
                            double(out.l1), double(out.l1_bound));
    if (out.l2_squared > out.l2_bound * (Real(1) + slack))
        throw ResidualError("l1_l2_bounds_check: L2 bound violated",
                            double(out.l2_squared), double(out.l2_bound));
    return out;
}

}  // namespace rhfact
