#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nvk/quadrature.hpp"

using nvk::Complex;
using nvk::QuadratureConfig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integrate_1d: Cauchy weight has mass pi") {
    QuadratureConfig cfg;
    auto f = [](double t) { return Complex{1.0 / (1.0 + t * t), 0.0}; };
    const Complex value = nvk::integrate_1d(f, cfg);
    CHECK(std::abs(value - Complex{kPi, 0.0}) < 1e-11);
}

TEST_CASE("integrate_1d: squared Cauchy weight, residue value pi/2") {
    // 1/((t-i)(t+i)(1+t^2)) = (1+t^2)^{-2}; double pole at i gives pi/2.
    QuadratureConfig cfg;
    const Complex i{0.0, 1.0};
    auto f = [i](double t) {
        return 1.0 / ((t - i) * (t + i)) * (1.0 / (1.0 + t * t));
    };
    const Complex value = nvk::integrate_1d(f, cfg);
    CHECK(std::abs(value - Complex{kPi / 2.0, 0.0}) < 1e-11);
}

TEST_CASE("integrate_1d: oscillatory Fourier-type integral, residue value pi/e") {
    // The oscillation never decays on the compactified domain, so this one is
    // hard-truncated; the tail past the radius contributes O(R^{-2}).
    QuadratureConfig cfg;
    cfg.truncation_radius = 1e4;
    cfg.include_tails = false;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-11;
    cfg.max_subdivisions = 60000;
    auto f = [](double t) {
        return std::exp(Complex{0.0, t}) / (1.0 + t * t);
    };
    const Complex value = nvk::integrate_1d(f, cfg);
    CHECK(std::abs(value - Complex{kPi / std::exp(1.0), 0.0}) < 1e-7);
}

TEST_CASE("integrate_1d: linearity") {
    QuadratureConfig cfg;
    auto f = [](double t) { return Complex{1.0 / (1.0 + t * t), 0.0}; };
    auto g = [](double t) { return Complex{0.0, 1.0 / ((1.0 + t * t) * (1.0 + t * t))}; };
    const Complex alpha{2.0, -1.0};
    const Complex beta{0.5, 3.0};
    auto combo = [&](double t) { return alpha * f(t) + beta * g(t); };
    const Complex lhs = nvk::integrate_1d(combo, cfg);
    const Complex rhs = alpha * nvk::integrate_1d(f, cfg) + beta * nvk::integrate_1d(g, cfg);
    CHECK(std::abs(lhs - rhs) < 10.0 * cfg.abs_tol + 1e-10);
}

TEST_CASE("integrate_1d: narrow Lorentzian found via breakpoint hint") {
    QuadratureConfig cfg;
    const double center = 3.7;
    const double width = 1e-4;
    auto f = [=](double t) {
        const double d = t - center;
        return Complex{width / (d * d + width * width), 0.0};
    };
    const double cuts[] = {center};
    const Complex value = nvk::integrate_1d(f, cfg, cuts);
    CHECK(std::abs(value.real() - kPi) < 1e-9);
}

TEST_CASE("integrate_1d: budget exhaustion reports non-convergence") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 2;
    auto f = [](double t) {
        return Complex{std::cos(40.0 * t) / (1.0 + t * t), 0.0};
    };
    CHECK_THROWS_AS(nvk::integrate_1d(f, cfg), nvk::NonConvergentError);
}

TEST_CASE("integrate_over_rn: separable Cauchy product over R^2") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-11;
    auto f = [](std::span<const double> t) {
        return Complex{1.0 / ((1.0 + t[0] * t[0]) * (1.0 + t[1] * t[1])), 0.0};
    };
    const Complex value = nvk::integrate_over_rn(2, f, cfg);
    CHECK(std::abs(value.real() - kPi * kPi) < 1e-7);
}

TEST_CASE("trapezoid_periodic: exact on trigonometric polynomials") {
    auto f = [](double s) { return Complex{std::cos(3.0 * s) * std::cos(3.0 * s), 0.0}; };
    const Complex value = nvk::trapezoid_periodic(f, 64);
    CHECK(std::abs(value.real() - kPi) < 1e-13);
}

TEST_CASE("QuadratureConfig: invalid settings rejected") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 0;
    auto f = [](double) { return Complex{0.0, 0.0}; };
    CHECK_THROWS_AS(nvk::integrate_1d(f, cfg), nvk::ValidationError);
}
