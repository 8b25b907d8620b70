#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rhfact/fourier.hpp"
#include "test_util.hpp"

using namespace rhfact;
using testutil::kPi;

TEST_CASE("grid invariants") {
    Grid<double> g(0.25, 4);
    CHECK(g.size() == 9);
    CHECK(g.point(0) == doctest::Approx(-1.0));
    CHECK(g.point(4) == doctest::Approx(0.0));
    CHECK(g.point(8) == doctest::Approx(1.0));
    CHECK_THROWS_AS(Grid<double>(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Grid<double>(0.1, 0), std::invalid_argument);
}

TEST_CASE("forward_ft reproduces the Gaussian transform pair") {
    Grid<double> g(0.25, 256);
    auto f = sample(g, [](double x) { return std::exp(-0.5 * x * x); });
    auto F = forward_ft(f);
    double err = 0.0;
    for (Index i = 0; i < F.size(); ++i)
        err = std::max(err, std::abs(F.values[i] - testutil::gauss_ft(F.omega(i))));
    CHECK(err < 1e-8);
}

TEST_CASE("forward_ft of zero is zero") {
    Grid<double> g(0.5, 32);
    auto f = sample(g, [](double) { return 0.0; });
    auto F = forward_ft(f);
    CHECK(max_abs(F.values) == 0.0);
}

TEST_CASE("forward_ft of exp(-|x|) matches 2/(1+w^2) within the alias bound") {
    // The discrete sum equals the periodization sum_j F(w + 2 pi j / h), so
    // the deviation from F is bounded by the neighboring images.
    Grid<double> g(0.25, 512);
    auto f = sample(g, [](double x) { return std::exp(-std::abs(x)); });
    auto F = forward_ft(f);
    auto closed = [](double w) { return 2.0 / (1.0 + w * w); };
    for (Index i = 0; i < F.size(); i += 16) {
        const double w = F.omega(i);
        double alias = 0.0;
        for (int j = 1; j <= 50; ++j) {
            alias += closed(w + 2.0 * kPi * j / g.h);
            alias += closed(w - 2.0 * kPi * j / g.h);
        }
        CHECK(std::abs(F.values[i] - closed(w)) <= alias + 1e-10);
    }
}

TEST_CASE("forward_ft is linear") {
    Grid<double> g(0.25, 128);
    auto f1 = sample(g, [](double x) { return std::exp(-0.5 * x * x); });
    auto f2 = sample(g, [](double x) {
        return std::polar(std::exp(-x * x / 3.0), 1.7 * x);
    });
    const Complex<double> a(2.0, -1.0), b(0.5, 3.0);
    SampledFunction<double> combo(g, a * f1.values + b * f2.values);
    auto F = forward_ft(combo);
    auto F1 = forward_ft(f1);
    auto F2 = forward_ft(f2);
    CHECK(max_abs<double>(F.values - a * F1.values - b * F2.values) <
          1e-12 * max_abs(F.values));
}

TEST_CASE("forward_ft rejects non-finite input") {
    Grid<double> g(0.5, 8);
    auto f = sample(g, [](double) { return 1.0; });
    f.values[3] = Complex<double>(std::nan(""), 0.0);
    CHECK_THROWS_AS(forward_ft(f), std::invalid_argument);
    auto F = forward_ft(sample(g, [](double) { return 1.0; }));
    F.values[0] = Complex<double>(0.0, std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(inverse_ft(F), std::invalid_argument);
}

TEST_CASE("round trip is exact at grid level") {
    for (auto& entry : testutil::pd_corpus()) {
        Grid<double> g(0.25, 256);
        auto f = sample(g, entry.f);
        CHECK_MESSAGE(roundtrip_residual(f) < 1e-12 * std::max(1.0, max_abs(f)),
                      entry.name);
    }
}

TEST_CASE("inverse_ft of a windowed half-line indicator matches quadrature") {
    // F = 1 on [0, w_max], 0 on [-w_max, 0); oracle is the closed-form
    // integral (1/2pi) int_0^{w_max} e^{iwx} dw with the half-shared w = 0
    // bin reproduced by subtracting half of the lone w=0 contribution.
    const Index n_half = 512;
    const double d_omega = 2.0 * kPi / ((2 * n_half + 1) * 0.25);
    ComplexArray<double> vals(2 * n_half + 1);
    for (Index i = 0; i < vals.size(); ++i)
        vals[i] = (i >= n_half) ? 1.0 : 0.0;
    SpectralFunction<double> F(d_omega, n_half, vals);
    auto f = inverse_ft(F);
    const double wmax = F.omega_max();
    for (double x : {0.7, 1.9, -3.3, 12.1}) {
        const Complex<double> iwx(0.0, wmax * x);
        const Complex<double> closed =
            (std::exp(iwx) - 1.0) / Complex<double>(0.0, 2.0 * kPi * x);
        const Index idx = f.grid.center() + Index(std::lround(x / f.grid.h));
        const double xg = f.grid.point(idx);
        const Complex<double> iwxg(0.0, wmax * xg);
        const Complex<double> closed_g =
            (std::exp(iwxg) - 1.0) / Complex<double>(0.0, 2.0 * kPi * xg);
        CHECK(std::abs(f.values[idx] - closed_g) < 2.5e-3);
    }
    // F identically zero inverts to zero
    SpectralFunction<double> Z(d_omega, 4, ComplexArray<double>::Zero(9));
    CHECK(max_abs(inverse_ft(Z).values) == 0.0);
}

TEST_CASE("hermitian defect detects asymmetry") {
    Grid<double> g(0.5, 64);
    auto f = sample(g, [](double x) { return std::polar(std::exp(-x * x), x); });
    CHECK(hermitian_defect(f) < 1e-14);
    f.values[3] += Complex<double>(0.0, 0.1);
    CHECK(hermitian_defect(f) > 0.05);
}
