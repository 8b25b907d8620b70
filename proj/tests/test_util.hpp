// Shared fixtures for the unit tests: the positive-definite function corpus
// and a few closed-form transforms used as oracles.
#pragma once

#include "rhfact/types.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace testutil {

using rhfact::Complex;
using rhfact::Grid;
using rhfact::SampledFunction;

inline constexpr double kPi = std::numbers::pi;

struct CorpusEntry {
    std::string name;
    std::function<Complex<double>(double)> f;
    bool pd;
};

// Ten functions: Gaussians, Cauchy-type, modulated Gaussians, band-limited
// sincs, a mixture. All but the last are positive definite.
inline std::vector<CorpusEntry> pd_corpus() {
    std::vector<CorpusEntry> c;
    c.push_back({"gaussian", [](double x) {
                     return Complex<double>(std::exp(-0.5 * x * x), 0.0);
                 }, true});
    c.push_back({"wide_gaussian", [](double x) {
                     return Complex<double>(std::exp(-x * x / 8.0), 0.0);
                 }, true});
    c.push_back({"cauchy", [](double x) {
                     return Complex<double>(1.0 / (1.0 + x * x), 0.0);
                 }, true});
    c.push_back({"cauchy_wide", [](double x) {
                     return Complex<double>(4.0 / (4.0 + x * x), 0.0);
                 }, true});
    c.push_back({"modulated_gaussian", [](double x) {
                     return std::polar(std::exp(-0.5 * x * x), 2.0 * x);
                 }, true});
    c.push_back({"modulated_gaussian_neg", [](double x) {
                     return std::polar(std::exp(-x * x / 4.0), -3.0 * x);
                 }, true});
    c.push_back({"sinc", [](double x) {
                     const double t = 2.0 * x;
                     return Complex<double>(
                         std::abs(t) < 1e-8 ? 1.0 - t * t / 6.0
                                            : std::sin(t) / t, 0.0);
                 }, true});
    c.push_back({"fejer", [](double x) {
                     const double t = x;
                     const double s = std::abs(t) < 1e-8
                                          ? 1.0 - t * t / 6.0
                                          : std::sin(t) / t;
                     return Complex<double>(s * s, 0.0);
                 }, true});
    c.push_back({"cos_gaussian", [](double x) {
                     return Complex<double>(
                         std::cos(3.0 * x) * std::exp(-0.5 * x * x), 0.0);
                 }, true});
    c.push_back({"gaussian_mixture", [](double x) {
                     return Complex<double>(0.5 * std::exp(-0.5 * x * x) +
                                            0.5 * std::exp(-x * x / 18.0), 0.0);
                 }, true});
    return c;
}

inline Complex<double> rect_indicator(double x) {
    return Complex<double>(std::abs(x) <= 1.0 ? 1.0 : 0.0, 0.0);
}

// transform of exp(-x^2/2)
inline double gauss_ft(double w) {
    return std::sqrt(2.0 * kPi) * std::exp(-0.5 * w * w);
}

// Frozen Dawson values (Maclaurin/continued-fraction independent sources).
struct DawsonValue {
    Complex<double> z;
    Complex<double> F;
};

inline std::vector<DawsonValue> dawson_table() {
    return {
        {{0.25, 0.0}, {0.23983916356289821236, 0.0}},
        {{0.5, 0.0}, {0.42443638350202229593, 0.0}},
        {{1.0, 0.0}, {0.53807950691276841914, 0.0}},
        {{2.0, 0.0}, {0.30134038892379196603, 0.0}},
        {{3.0, 0.0}, {0.17827103061055828734, 0.0}},
        {{1.0, 0.5}, {0.65612206343909364296, -0.088338741190341334496}},
        {{2.0, -1.0}, {0.16353940943453556149, 0.15312457553712298036}},
    };
}

}  // namespace testutil
