// Distributions of the running supremum M_q and infimum I_q of a Levy
// process at an independent Exponential(q) time, through the multiplicative
// factorization of q/(q + psi):
//
//   g(lam) = (c + ln q - ln(q + psi(lam))) / (1 + i lam)
//   g = g_plus + g_minus            (half-line split)
//   psi_q_plus  = exp((i lam + 1) g_plus  - c/2)   -> char. function of M_q
//   psi_q_minus = exp((i lam + 1) g_minus - c/2)   -> char. function of I_q
//
// g decays only like log|lam|/|lam|, far too slowly for a windowed grid
// split, so the split runs through the principal-value Hilbert quadrature on
// the analytic evaluator of g. Densities come from the factor transforms
// with a matched rational tail subtracted, which removes the Gibbs error of
// a truncated Fourier inversion.
#pragma once

#include "rhfact/additive.hpp"
#include "rhfact/levy.hpp"
#include "rhfact/multiplicative.hpp"
#include "rhfact/posdef.hpp"

#include <numbers>

namespace rhfact {

// Analytic evaluator of g; ln(q + psi) takes the principal branch, which is
// continuous because Re(q + psi) >= q > 0.
template <typename Real>
auto g_evaluator(const LevyModel<Real>& model, Real q, Real c) {
    return [model, q, c](Real lam) -> Complex<Real> {
        const Complex<Real> num =
            c + std::log(q) - std::log(q + psi_eval(model, lam));
        return num / Complex<Real>(Real(1), lam);
    };
}

template <typename Real>
SampledFunction<Real> build_g(const LevyModel<Real>& model, Real q, Real c,
                              const Grid<Real>& grid) {
    if (!(q > Real(0))) throw std::invalid_argument("build_g: q must be > 0");
    model.validate();
    return sample(grid, g_evaluator(model, q, c));
}

template <typename Real>
struct WhFactors {
    SampledFunction<Real> psi_q_plus;
    SampledFunction<Real> psi_q_minus;
    SampledFunction<Real> g_plus;
    SampledFunction<Real> g_minus;
    Real c_used = Real(0);
    Real product_residual = Real(0);
    PdReport<Real> pd_plus;
    PdReport<Real> pd_minus;
};

struct WhOptions {
    double c = 0.0;
    double tol_residual = 1e-6;
    HilbertOptions hilbert{};
    PdOptions pd{};
    bool check_pd = true;
};

// Factorize q/(q + psi) into the supremum/infimum characteristic functions,
// both normalized to 1 at lam = 0 (the rescaling cancels c and the split's
// constant ambiguity).
template <typename Real>
WhFactors<Real> wh_factors(const LevyModel<Real>& model, Real q,
                           const Grid<Real>& grid, const WhOptions& opt = {}) {
    if (!(q > Real(0)))
        throw std::invalid_argument("wh_factors: q must be > 0");
    model.validate();
    const Real c = Real(opt.c);
    auto g = g_evaluator(model, q, c);
    const AdditiveSplit<Real> split =
        split_additive_hilbert<Real>(g, grid, opt.hilbert);

    WhFactors<Real> out;
    out.c_used = c;
    out.g_plus = split.f_plus;
    out.g_minus = split.f_minus;

    const Index m = grid.size();
    ComplexArray<Real> fp(m), fm(m);
    for (Index i = 0; i < m; ++i) {
        const Complex<Real> w(Real(1), grid.point(i));  // 1 + i lam
        fp[i] = std::exp(w * split.f_plus.values[i] - c / Real(2));
        fm[i] = std::exp(w * split.f_minus.values[i] - c / Real(2));
    }
    const Complex<Real> u = fp[grid.center()];
    fp /= u;
    fm *= u;
    out.psi_q_plus = SampledFunction<Real>(grid, std::move(fp));
    out.psi_q_minus = SampledFunction<Real>(grid, std::move(fm));

    Real resid = Real(0);
    for (Index i = 0; i < m; ++i) {
        const Complex<Real> target =
            Complex<Real>(q, 0) / (q + psi_eval(model, grid.point(i)));
        resid = std::max(resid,
                         std::abs(out.psi_q_plus.values[i] *
                                      out.psi_q_minus.values[i] -
                                  target));
    }
    out.product_residual = resid;
    if (resid > Real(opt.tol_residual))
        throw ResidualError("wh_factors: product residual",
                            double(resid), opt.tol_residual);

    if (opt.check_pd) {
        out.pd_plus = pd_report(out.psi_q_plus, opt.pd);
        out.pd_minus = pd_report(out.psi_q_minus, opt.pd);
        if (out.pd_plus.verdict == PdVerdict::not_pd ||
            out.pd_minus.verdict == PdVerdict::not_pd)
            throw ResidualError(
                "wh_factors: factor failed the positive-definiteness check "
                "(grid or c misconfigured)",
                double(std::min(out.pd_plus.min_bochner_eigenvalue,
                                out.pd_minus.min_bochner_eigenvalue)),
                opt.pd.tol_rel);
    }
    return out;
}

// Classical closed-form factors for Brownian motion with drift:
// q + psi = sigma^2/2 (lam - i b_minus)(lam + i b_plus) gives
//   q/(q+psi) = [b_plus/(b_plus - i lam)] [b_minus/(b_minus + i lam)],
// b_pm = (mp mu + sqrt(mu^2 + 2 q sigma^2)) / sigma^2.
template <typename Real>
struct BmFactors {
    Real b_plus = Real(0);
    Real b_minus = Real(0);

    Complex<Real> factor_plus(Real lam) const {
        return b_plus / Complex<Real>(b_plus, -lam);
    }
    Complex<Real> factor_minus(Real lam) const {
        return b_minus / Complex<Real>(b_minus, lam);
    }
};

template <typename Real>
BmFactors<Real> analytic_bm_factors(Real mu, Real sigma, Real q) {
    if (!(sigma > Real(0)) || !(q > Real(0)))
        throw std::invalid_argument("analytic_bm_factors: need sigma, q > 0");
    const Real root = std::sqrt(mu * mu + Real(2) * q * sigma * sigma);
    return BmFactors<Real>{(-mu + root) / (sigma * sigma),
                           (mu + root) / (sigma * sigma)};
}

template <typename Real>
struct ExtremaDistributions {
    RealArray<Real> x_grid;
    RealArray<Real> pdf_sup, cdf_sup;
    RealArray<Real> pdf_inf, cdf_inf;
    Real mass_sup = Real(0), mass_inf = Real(0);
    Real negativity_sup = Real(0), negativity_inf = Real(0);
    // fitted rational tail parameters (diagnostic)
    Complex<Real> kappa_sup{0, 0}, bhat_sup{0, 0};
    Complex<Real> kappa_inf{0, 0}, bhat_inf{0, 0};
};

struct ExtremaOptions {
    double tol_mass = 0.02;  // abort when total mass leaves [1-tol, 1+tol]
};

namespace detail {

// Two-point rational tail fit psi(lam) ~ kappa/(bhat -+ i lam) at outer grid
// nodes. Only the tail beyond the grid matters downstream, so moderate
// parameter noise is harmless; degenerate fits fall back to bhat = 1.
template <typename Real>
void fit_tail(const SampledFunction<Real>& f, int sign, Complex<Real>& kappa,
              Complex<Real>& bhat) {
    const Index m = f.size();
    const Index i1 = Index(0.925 * double(m - 1));
    const Index i2 = Index(0.975 * double(m - 1));
    const Real l1 = f.grid.point(i1), l2 = f.grid.point(i2);
    const Complex<Real> inv1 = Real(1) / f.values[i1];
    const Complex<Real> inv2 = Real(1) / f.values[i2];
    const Complex<Real> ii(0, 1);
    kappa = -Real(sign) * ii * (l2 - l1) / (inv2 - inv1);
    bhat = kappa * inv1 + Real(sign) * ii * l1;
    if (!(bhat.real() > Real(0)) || !std::isfinite(bhat.real()) ||
        !std::isfinite(kappa.real())) {
        bhat = Complex<Real>(1, 0);
        kappa = f.values[i2] * Complex<Real>(Real(1), -Real(sign) * l2);
    }
}

}  // namespace detail

// Invert both factors to densities on x_grid:
//   pdf(x) = (1/2pi) int e^{-i lam x} psi(lam) d lam
// evaluated as [windowed trapezoid of (psi - proxy)] + [exact inversion of
// proxy], proxy = kappa/(bhat -+ i lam). cdfs by cumulative trapezoid; small
// negative pdf values are clipped with the clipped mass recorded.
template <typename Real>
ExtremaDistributions<Real> extrema_distributions(const WhFactors<Real>& factors,
                                                 const RealArray<Real>& x_grid,
                                                 const ExtremaOptions& opt = {}) {
    const SampledFunction<Real>& fp = factors.psi_q_plus;
    const SampledFunction<Real>& fm = factors.psi_q_minus;
    const Grid<Real>& grid = fp.grid;
    const Index m = grid.size();
    const Index nx = x_grid.size();
    if (nx < 2)
        throw std::invalid_argument("extrema_distributions: x_grid too small");

    ExtremaDistributions<Real> out;
    out.x_grid = x_grid;
    out.pdf_sup.resize(nx);
    out.pdf_inf.resize(nx);
    out.cdf_sup.resize(nx);
    out.cdf_inf.resize(nx);

    detail::fit_tail(fp, +1, out.kappa_sup, out.bhat_sup);
    detail::fit_tail(fm, -1, out.kappa_inf, out.bhat_inf);

    ComplexArray<Real> brp(m), brm(m);
    for (Index i = 0; i < m; ++i) {
        const Real lam = grid.point(i);
        brp[i] = fp.values[i] -
                 out.kappa_sup / (out.bhat_sup - Complex<Real>(0, lam));
        brm[i] = fm.values[i] -
                 out.kappa_inf / (out.bhat_inf + Complex<Real>(0, lam));
    }

    const Real norm = grid.h / (Real(2) * std::numbers::pi_v<Real>);
    for (Index j = 0; j < nx; ++j) {
        const Real x = x_grid[j];
        Complex<Real> accp(0, 0), accm(0, 0);
        for (Index i = 0; i < m; ++i) {
            const Real lam = grid.point(i);
            const Complex<Real> e = std::polar(Real(1), -lam * x);
            accp += brp[i] * e;
            accm += brm[i] * e;
        }
        Real ps = accp.real() * norm;
        Real pi_ = accm.real() * norm;
        if (x >= Real(0))
            ps += (out.kappa_sup * std::exp(-out.bhat_sup * x)).real();
        if (x <= Real(0))
            pi_ += (out.kappa_inf * std::exp(out.bhat_inf * x)).real();
        out.pdf_sup[j] = ps;
        out.pdf_inf[j] = pi_;
    }

    // clip small negative values, record what was clipped (trapezoid mass)
    auto clip = [&](RealArray<Real>& pdf) {
        RealArray<Real> neg = (-pdf).cwiseMax(Real(0));
        Real negmass = Real(0);
        for (Index j = 0; j + 1 < nx; ++j)
            negmass += Real(0.5) * (neg[j] + neg[j + 1]) *
                       (x_grid[j + 1] - x_grid[j]);
        pdf = pdf.cwiseMax(Real(0));
        return negmass;
    };
    out.negativity_sup = clip(out.pdf_sup);
    out.negativity_inf = clip(out.pdf_inf);

    auto cumulate = [&](const RealArray<Real>& pdf, RealArray<Real>& cdf) {
        cdf[0] = Real(0);
        for (Index j = 1; j < nx; ++j)
            cdf[j] = cdf[j - 1] + Real(0.5) * (pdf[j] + pdf[j - 1]) *
                                      (x_grid[j] - x_grid[j - 1]);
        return cdf[nx - 1];
    };
    out.mass_sup = cumulate(out.pdf_sup, out.cdf_sup);
    out.mass_inf = cumulate(out.pdf_inf, out.cdf_inf);

    const Real lo = Real(1) - Real(opt.tol_mass), hi = Real(1) + Real(opt.tol_mass);
    if (out.mass_sup < lo || out.mass_sup > hi || out.mass_inf < lo ||
        out.mass_inf > hi)
        throw ResidualError(
            "extrema_distributions: total mass outside tolerance "
            "(factorization unusable)",
            double(std::min(out.mass_sup, out.mass_inf)), opt.tol_mass);
    return out;
}

// Piecewise-linear cdf lookup with clamping outside the grid.
template <typename Real>
Real interp_cdf(const RealArray<Real>& x_grid, const RealArray<Real>& cdf,
                Real x) {
    const Index n = x_grid.size();
    if (x <= x_grid[0]) return cdf[0];
    if (x >= x_grid[n - 1]) return cdf[n - 1];
    Index lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const Index mid = (lo + hi) / 2;
        (x_grid[mid] <= x ? lo : hi) = mid;
    }
    const Real t = (x - x_grid[lo]) / (x_grid[lo + 1] - x_grid[lo]);
    return cdf[lo] + t * (cdf[lo + 1] - cdf[lo]);
}

}  // namespace rhfact
