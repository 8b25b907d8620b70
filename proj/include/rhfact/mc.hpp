// Monte Carlo ground truth for the extrema pipeline: simulate jump-diffusion
// paths to an independent exponential (or geometric) killing time and record
// the running maximum and minimum of the skeleton.
//
// Determinism: path i draws from its own xoshiro256++ stream seeded by
// substream_seed(seed, i), so results are bit-identical for a fixed seed no
// matter how many workers run or how paths are scheduled.
#pragma once

#include "rhfact/levy.hpp"
#include "rhfact/rng.hpp"
#include "rhfact/types.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace rhfact {

template <typename Real>
struct SimConfig {
    LevyModel<Real> model;
    KillingTime<Real> killing = KillingTime<Real>::exponential(Real(1));
    long n_paths = 100000;
    Real dt = Real(1e-3);
    std::uint64_t seed = 1;
    int n_workers = 0;  // 0: hardware concurrency

    void validate() const {
        model.validate();
        if (n_paths < 1)
            throw std::invalid_argument("SimConfig: n_paths must be >= 1");
        if (!(dt > Real(0)))
            throw std::invalid_argument("SimConfig: dt must be > 0");
    }
};

template <typename Real>
struct EmpiricalDistribution {
    std::vector<Real> sorted_samples;

    long n() const { return static_cast<long>(sorted_samples.size()); }

    Real ecdf(Real x) const {
        const auto it = std::upper_bound(sorted_samples.begin(),
                                         sorted_samples.end(), x);
        return Real(it - sorted_samples.begin()) / Real(sorted_samples.size());
    }
};

namespace detail {

template <typename Real>
Real draw_jump(const JumpSpec<Real>& j, Xoshiro256& rng) {
    switch (j.kind) {
        case JumpKind::gaussian:
            return j.mean + j.stddev * Real(rng.normal());
        case JumpKind::exponential_twosided:
            return rng.uniform() < double(j.p)
                       ? Real(rng.exponential(double(j.theta_plus)))
                       : -Real(rng.exponential(double(j.theta_minus)));
        default:
            return Real(0);
    }
}

// One path: Gaussian increment then jumps per step, extrema updated after
// each increment; the final step is shortened to land exactly on the killing
// time.
template <typename Real>
void run_path(const SimConfig<Real>& cfg, std::uint64_t path_index, Real& out_max,
              Real& out_min) {
    Xoshiro256 rng(substream_seed(cfg.seed, path_index));
    Real horizon;
    if (cfg.killing.kind == KillingTime<Real>::Kind::exponential) {
        horizon = Real(rng.exponential(double(cfg.killing.q)));
    } else {
        // T ~ Geometric(q) on {0, 1, ...}, P(T = k) = (1-q) q^k; unit steps
        const double u = rng.uniform_pos();
        horizon = Real(std::floor(std::log(u) / std::log(double(cfg.killing.q))));
        if (horizon < Real(0)) horizon = Real(0);
    }
    Real x = Real(0), mx = Real(0), mn = Real(0);
    const bool has_jumps = cfg.model.jumps.kind != JumpKind::none;
    const Real eta = cfg.model.jumps.intensity;
    Real t = Real(0);
    while (t < horizon) {
        const Real step = std::min(cfg.dt, horizon - t);
        x += cfg.model.mu * step +
             cfg.model.sigma * std::sqrt(step) * Real(rng.normal());
        mx = std::max(mx, x);
        mn = std::min(mn, x);
        if (has_jumps) {
            const long k = rng.poisson(double(eta * step));
            for (long jj = 0; jj < k; ++jj) {
                x += draw_jump(cfg.model.jumps, rng);
                mx = std::max(mx, x);
                mn = std::min(mn, x);
            }
        }
        t += step;
    }
    out_max = mx;
    out_min = mn;
}

}  // namespace detail

template <typename Real>
std::pair<EmpiricalDistribution<Real>, EmpiricalDistribution<Real>>
simulate_extrema(const SimConfig<Real>& cfg) {
    cfg.validate();
    const long n = cfg.n_paths;
    std::vector<Real> maxima(static_cast<size_t>(n));
    std::vector<Real> minima(static_cast<size_t>(n));

    int workers = cfg.n_workers > 0
                      ? cfg.n_workers
                      : int(std::max(1u, std::thread::hardware_concurrency()));
    workers = int(std::min<long>(workers, n));

    auto work = [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i)
            detail::run_path(cfg, std::uint64_t(i),
                             maxima[size_t(i)], minima[size_t(i)]);
    };
    if (workers == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long lo = w * chunk, hi = std::min<long>(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(maxima.begin(), maxima.end());
    std::sort(minima.begin(), minima.end());
    return {EmpiricalDistribution<Real>{std::move(maxima)},
            EmpiricalDistribution<Real>{std::move(minima)}};
}

// Kolmogorov-Smirnov distance between an empirical distribution and a
// reference cdf, evaluated at the sample points from both sides.
template <typename Real, typename Cdf>
Real ks_distance(const EmpiricalDistribution<Real>& emp, Cdf&& cdf) {
    const long n = emp.n();
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
    Real d = Real(0);
    for (long i = 0; i < n; ++i) {
        const Real F = Real(cdf(emp.sorted_samples[size_t(i)]));
        d = std::max(d, std::abs(F - Real(i + 1) / Real(n)));
        d = std::max(d, std::abs(F - Real(i) / Real(n)));
    }
    return d;
}

}  // namespace rhfact
