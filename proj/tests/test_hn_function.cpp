#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nvk/hn_function.hpp"
#include "nvk/sampling.hpp"

using nvk::Complex;
using nvk::ComplexPoint;
using nvk::HNData;
using nvk::HNFunction;
using nvk::kImagUnit;
using nvk::MeasureSpec;

namespace {
constexpr double kPi = std::numbers::pi;

HNData curve_data() {
    return HNData(0.0, {0.0, 0.0},
                  MeasureSpec::curve_pushforward(nvk::antidiagonal_curve(), kPi));
}
}  // namespace

TEST_CASE("evaluate: pure constant data") {
    auto q = HNFunction::data_backed(HNData(3.0, {0.0, 0.0}, MeasureSpec::zero(2)));
    for (const auto& z : nvk::sample_upper_points(2, 5, 17))
        CHECK(q.evaluate(z) == Complex{3.0, 0.0});
}

TEST_CASE("evaluate: inverse-sum closed form") {
    auto q = HNFunction::inverse_sum();
    const ComplexPoint z{kImagUnit, kImagUnit};
    CHECK(std::abs(q.evaluate(z) - Complex{0.0, 0.5}) < 1e-15);
}

TEST_CASE("evaluate: representation data reproduces the inverse-sum closed form") {
    auto q = HNFunction::data_backed(curve_data());
    auto closed = HNFunction::inverse_sum();
    const ComplexPoint z{kImagUnit, kImagUnit};
    CHECK(std::abs(q.evaluate(z) - Complex{0.0, 0.5}) < 1e-6);
    for (const auto& p : nvk::sample_upper_points(2, 6, 33))
        CHECK(std::abs(q.evaluate(p) - closed.evaluate(p)) < 1e-6);
}

TEST_CASE("evaluate: point-mass fixture closed form") {
    // pi^{-2} int K_2 d(pi^2 delta_0) = K_2(z, 0). Hand evaluation gives i at
    // (i,i) and i/8 at (2i,2i).
    auto q = HNFunction::dirac_poisson();
    CHECK(std::abs(q.evaluate(ComplexPoint{kImagUnit, kImagUnit}) - kImagUnit) < 1e-15);
    const ComplexPoint z2{Complex{0.0, 2.0}, Complex{0.0, 2.0}};
    CHECK(std::abs(q.evaluate(z2) - Complex{0.0, 0.125}) < 1e-15);

    auto rep = q.representation();
    REQUIRE(rep.has_value());
    auto backed = HNFunction::data_backed(*rep);
    for (const auto& p : nvk::sample_upper_points(2, 6, 34))
        CHECK(std::abs(q.evaluate(p) - backed.evaluate(p)) < 1e-13);
}

TEST_CASE("evaluate: rejects points outside the poly-upper half-plane") {
    auto q = HNFunction::inverse_sum();
    CHECK_THROWS_AS(q.evaluate(ComplexPoint{kImagUnit, Complex{0.0, -1.0}}), nvk::DomainError);
    CHECK_THROWS_AS(q.evaluate(ComplexPoint{kImagUnit, Complex{1.0, 0.0}}), nvk::DomainError);
}

TEST_CASE("evaluate_symmetric: piecewise closed form of the inverse sum") {
    auto q = HNFunction::inverse_sum();
    const ComplexPoint upper_lower{kImagUnit, Complex{0.0, -1.0}};
    CHECK(std::abs(q.evaluate_symmetric(upper_lower) - Complex{0.0, -0.5}) < 1e-15);

    for (const auto& z : nvk::sample_upper_points(2, 5, 35))
        CHECK(q.evaluate_symmetric(z) == q.evaluate(z));
}

TEST_CASE("evaluate_symmetric: quadrature matches the piecewise fixture") {
    auto q = HNFunction::data_backed(curve_data());
    auto closed = HNFunction::inverse_sum();
    const ComplexPoint upper_lower{kImagUnit, Complex{0.0, -1.0}};
    CHECK(std::abs(q.evaluate_symmetric(upper_lower) - Complex{0.0, -0.5}) < 1e-6);
    for (const auto& z : nvk::sample_offreal_points(2, 8, 36))
        CHECK(std::abs(q.evaluate_symmetric(z) - closed.evaluate_symmetric(z)) < 1e-6);
}

TEST_CASE("evaluate_symmetric: constant flips with the orthant") {
    auto q = HNFunction::constant(Complex{2.0, 0.5}, 2);
    CHECK(q.evaluate_symmetric(ComplexPoint{kImagUnit, kImagUnit}) == Complex{2.0, 0.5});
    CHECK(q.evaluate_symmetric(ComplexPoint{kImagUnit, Complex{0.0, -1.0}}) ==
          Complex{2.0, -0.5});

    // Same statement through the representing measure.
    auto rep = q.representation();
    REQUIRE(rep.has_value());
    auto backed = HNFunction::data_backed(*rep);
    const ComplexPoint mixed{Complex{0.5, 1.5}, Complex{-0.4, -0.8}};
    CHECK(std::abs(backed.evaluate_symmetric(mixed) - Complex{2.0, -0.5}) < 1e-8);
    CHECK(std::abs(backed.evaluate(ComplexPoint{kImagUnit, kImagUnit}) - Complex{2.0, 0.5}) <
          1e-8);
}

TEST_CASE("evaluate_symmetric: one-sided limits disagree across the real axis") {
    auto q = HNFunction::inverse_sum();
    const Complex z1{0.7, 1.3};
    const double x2 = 0.4;
    const double eps = 1e-7;
    const Complex above = q.evaluate_symmetric(ComplexPoint{z1, Complex{x2, eps}});
    const Complex below = q.evaluate_symmetric(ComplexPoint{z1, Complex{x2, -eps}});
    const Complex limit_above = -1.0 / (z1 + x2);
    const Complex limit_below = 1.0 / (kImagUnit - x2);
    CHECK(std::abs(above - limit_above) < 1e-6);
    CHECK(std::abs(below - limit_below) < 1e-6);
    CHECK(std::abs(limit_above - limit_below) > 0.1);
}

TEST_CASE("b_limit_estimate: affine slopes recovered exactly") {
    auto q = HNFunction::affine(1.0, {2.0, 3.0});
    const ComplexPoint base{kImagUnit, kImagUnit};
    const auto r2 = nvk::b_limit_estimate(q.evaluator(), base, 1);
    CHECK(std::abs(r2.estimate - 3.0) < 1e-9);
    const auto r1 = nvk::b_limit_estimate(q.evaluator(), base, 0);
    CHECK(std::abs(r1.estimate - 2.0) < 1e-9);
}

TEST_CASE("b_limit_estimate: decaying fixtures give zero") {
    auto inv = HNFunction::inverse_sum();
    const ComplexPoint base{kImagUnit, kImagUnit};
    CHECK(std::abs(nvk::b_limit_estimate(inv.evaluator(), base, 0).estimate) < 1e-6);

    auto c = HNFunction::constant(kImagUnit, 1);
    CHECK(std::abs(nvk::b_limit_estimate(c.evaluator(), ComplexPoint{kImagUnit}, 0).estimate) <
          1e-9);
}

TEST_CASE("b_limit_estimate: representation data returns its stored slope") {
    auto data = HNData(0.0, {0.5, 0.25},
                       MeasureSpec::curve_pushforward(nvk::antidiagonal_curve(), kPi));
    auto q = HNFunction::data_backed(data);
    const ComplexPoint base{kImagUnit, kImagUnit};
    CHECK(std::abs(nvk::b_limit_estimate(q.evaluator(), base, 0).estimate - 0.5) < 1e-4);
    CHECK(std::abs(nvk::b_limit_estimate(q.evaluator(), base, 1).estimate - 0.25) < 1e-4);
}

TEST_CASE("b_limit_estimate: invariant under the unrelated coordinates") {
    auto q = HNFunction::data_backed(curve_data());
    const double a =
        nvk::b_limit_estimate(q.evaluator(), ComplexPoint{kImagUnit, kImagUnit}, 0).estimate;
    const double b =
        nvk::b_limit_estimate(q.evaluator(), ComplexPoint{kImagUnit, Complex{3.0, 7.0}}, 0)
            .estimate;
    CHECK(std::abs(a - b) < 1e-4);
    CHECK(std::abs(a) < 1e-4);
}

TEST_CASE("imaginary_part_nonneg_scan: verdicts") {
    auto inv = HNFunction::inverse_sum();
    const auto pts = nvk::sample_upper_points(2, 100, 41);
    const auto ok = nvk::imaginary_part_nonneg_scan(inv.evaluator(), pts);
    CHECK(ok.verdict);
    CHECK(ok.min_imag > 0.0);

    auto c = HNFunction::constant(Complex{3.0, 0.0}, 2);
    const auto flat = nvk::imaginary_part_nonneg_scan(c.evaluator(), pts);
    CHECK(flat.verdict);
    CHECK(flat.min_imag == 0.0);

    // z^2 maps -1 + 0.1i below the real axis: not Herglotz-Nevanlinna.
    auto square = [](const ComplexPoint& z) { return z[0] * z[0]; };
    const ComplexPoint witness[] = {ComplexPoint{Complex{-1.0, 0.1}}};
    const auto bad = nvk::imaginary_part_nonneg_scan(square, witness);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.min_imag < -0.1);
}

TEST_CASE("certified data keeps non-negative imaginary part on samples") {
    const auto sample = nvk::sample_upper_points(2, 10, 51);
    auto data = nvk::certify_nevanlinna(curve_data(), sample, 1e-6);
    REQUIRE(data.nevanlinna_certified());
    auto q = HNFunction::data_backed(data);
    const auto scan =
        nvk::imaginary_part_nonneg_scan(q.evaluator(), nvk::sample_upper_points(2, 20, 52), 1e-8);
    CHECK(scan.verdict);
}

TEST_CASE("HNData: validation") {
    CHECK_THROWS_AS(HNData(0.0, {1.0}, MeasureSpec::zero(2)), nvk::ValidationError);
    CHECK_THROWS_AS(HNData(0.0, {-0.5, 0.0}, MeasureSpec::zero(2)), nvk::ValidationError);
    CHECK_THROWS_AS(HNFunction::constant(Complex{0.0, -1.0}, 1), nvk::ValidationError);
    CHECK_THROWS_AS(HNFunction::affine(0.0, {-1.0}), nvk::ValidationError);
}
