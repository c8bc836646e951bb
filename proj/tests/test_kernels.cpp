#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nvk/kernels.hpp"
#include "nvk/sampling.hpp"

using nvk::Complex;
using nvk::ComplexPoint;
using nvk::kImagUnit;

namespace oracle {

// Defining forms, written exactly as raw pole differences. The library keeps
// only the factored forms; these stay here as the independent route.

Complex n_term_raw(int rho, Complex z, double t) {
    const Complex half_over_i = 1.0 / Complex{0.0, 2.0};
    switch (rho) {
        case -1: return half_over_i * (1.0 / (t - z) - 1.0 / (t - kImagUnit));
        case 0: return half_over_i * (1.0 / (t - kImagUnit) - 1.0 / (t + kImagUnit));
        case 1: return half_over_i * (1.0 / (t + kImagUnit) - 1.0 / (t - std::conj(z)));
        default: throw std::logic_error("bad rho");
    }
}

Complex kernel_Kn_raw(const ComplexPoint& z, std::span<const double> t) {
    Complex prod1{1.0, 0.0}, prod0{1.0, 0.0};
    for (std::size_t j = 0; j < z.dim(); ++j) {
        prod1 *= n_term_raw(-1, z[j], t[j]) + n_term_raw(0, kImagUnit, t[j]);
        prod0 *= n_term_raw(0, kImagUnit, t[j]);
    }
    return kImagUnit * (2.0 * prod1 - prod0);
}

Complex extended_poisson_sum_form(const ComplexPoint& z, const ComplexPoint& w,
                                  std::span<const double> t) {
    Complex prod{1.0, 0.0};
    for (std::size_t l = 0; l < z.dim(); ++l)
        prod *= n_term_raw(-1, z[l], t[l]) + n_term_raw(0, kImagUnit, t[l]) +
                n_term_raw(1, w[l], t[l]);
    return prod;
}

Complex extended_poisson_difference_form(const ComplexPoint& z, const ComplexPoint& w,
                                         std::span<const double> t) {
    Complex prod{1.0, 0.0};
    for (std::size_t l = 0; l < z.dim(); ++l)
        prod *= 1.0 / (t[l] - z[l]) - 1.0 / (t[l] - std::conj(w[l]));
    return prod / nvk::pow_two_i(z.dim());
}

}  // namespace oracle

TEST_CASE("n_term: N_0 is real, z-independent, equals 1 at t = 0") {
    CHECK(nvk::n_term(0, Complex{2.0, 3.0}, 0.0) == Complex{1.0, 0.0});
    for (double t : {-2.5, 0.3, 4.0}) {
        const Complex a = nvk::n_term(0, Complex{1.0, 1.0}, t);
        const Complex b = nvk::n_term(0, Complex{-4.0, -0.5}, t);
        CHECK(a.imag() == 0.0);
        CHECK(a == b);
    }
}

TEST_CASE("n_term: N_{-1}(i, t) vanishes identically") {
    for (double t : {-7.0, -0.1, 0.0, 2.0, 55.0})
        CHECK(std::abs(nvk::n_term(-1, kImagUnit, t)) < 1e-16);
}

TEST_CASE("n_term: conjugation swaps the -1 and +1 terms") {
    const Complex z{2.0, 3.0};
    const double t = 1.0;
    CHECK(std::abs(std::conj(nvk::n_term(-1, z, t)) - nvk::n_term(1, z, t)) < 1e-16);
}

TEST_CASE("n_term: matches the raw defining form") {
    nvk::Rng rng(31);
    for (int k = 0; k < 50; ++k) {
        const Complex z{rng.uniform(-5, 5), rng.coin() ? rng.uniform(0.1, 5) : rng.uniform(-5, -0.1)};
        const double t = rng.uniform(-8, 8);
        for (int rho : {-1, 0, 1})
            CHECK(std::abs(nvk::n_term(rho, z, t) - oracle::n_term_raw(rho, z, t)) < 1e-14);
    }
}

TEST_CASE("n_term: rejects real z") {
    CHECK_THROWS_AS(nvk::n_term(-1, Complex{1.0, 0.0}, 0.5), nvk::DomainError);
    CHECK_THROWS_AS(nvk::n_term(1, Complex{1.0, 0.0}, 0.5), nvk::DomainError);
}

TEST_CASE("kernel_Kn: one-variable closed form at (i, 1)") {
    // K_1(z,t) = 1/(t-z) - t/(1+t^2); at z=i, t=1 this equals i/2.
    const ComplexPoint z{kImagUnit};
    const double t[] = {1.0};
    CHECK(std::abs(nvk::kernel_Kn(z, t) - Complex{0.0, 0.5}) < 1e-15);
}

TEST_CASE("kernel_Kn: collapses to the N_0 product at z = i\\vec{1}") {
    const ComplexPoint z{kImagUnit, kImagUnit};
    const double t[] = {0.7, -1.3};
    Complex expected = kImagUnit;
    for (double tj : t) expected *= 1.0 / (1.0 + tj * tj);
    CHECK(std::abs(nvk::kernel_Kn(z, t) - expected) < 1e-15);
}

TEST_CASE("kernel_Kn: factored and defining forms agree") {
    const ComplexPoint z{Complex{0.0, 2.0}, Complex{1.0, 1.0}};
    const double t[] = {0.5, -3.0};
    CHECK(std::abs(nvk::kernel_Kn(z, t) - oracle::kernel_Kn_raw(z, t)) < 1e-14);

    nvk::Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        auto pts = nvk::sample_offreal_points(3, 1, 1000 + k);
        const double tt[] = {rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)};
        CHECK(std::abs(nvk::kernel_Kn(pts[0], tt) - oracle::kernel_Kn_raw(pts[0], tt)) < 1e-13);
    }
}

TEST_CASE("kernel_Kn: conjugate identity used by the difference formula") {
    // conj(K_n(w,t)) = -i (2 prod(N_1 + N_0) - prod N_0)
    for (int k = 0; k < 40; ++k) {
        auto pts = nvk::sample_offreal_points(2, 1, 2000 + k);
        nvk::Rng rng(3000 + k);
        const double t[] = {rng.uniform(-6, 6), rng.uniform(-6, 6)};
        const auto& w = pts[0];
        Complex prod1{1.0, 0.0}, prod0{1.0, 0.0};
        for (std::size_t j = 0; j < 2; ++j) {
            prod1 *= nvk::n_term(1, w[j], t[j]) + nvk::n_term(0, kImagUnit, t[j]);
            prod0 *= nvk::n_term(0, kImagUnit, t[j]);
        }
        const Complex rhs = -kImagUnit * (2.0 * prod1 - prod0);
        CHECK(std::abs(std::conj(nvk::kernel_Kn(w, t)) - rhs) < 1e-13);
    }
}

TEST_CASE("kernel_Kn: rejects real coordinates") {
    const ComplexPoint z{Complex{1.0, 0.0}, kImagUnit};
    const double t[] = {0.0, 0.0};
    CHECK_THROWS_AS(nvk::kernel_Kn(z, t), nvk::DomainError);
}

TEST_CASE("poisson_kernel: normalized values and definition expansion") {
    const double t0[] = {0.0};
    CHECK(nvk::poisson_kernel(ComplexPoint{kImagUnit}, t0) == Catch::Approx(1.0));
    const double t00[] = {0.0, 0.0};
    CHECK(nvk::poisson_kernel(ComplexPoint{kImagUnit, kImagUnit}, t00) == Catch::Approx(1.0));

    const double x = 1.5, y = 0.7, t = -0.4;
    const double tt[] = {t};
    CHECK(nvk::poisson_kernel(ComplexPoint{Complex{x, y}}, tt) ==
          Catch::Approx(y / ((t - x) * (t - x) + y * y)));

    CHECK_THROWS_AS(nvk::poisson_kernel(ComplexPoint{Complex{0.0, -1.0}}, t0), nvk::DomainError);
}

TEST_CASE("extended_poisson: reference values") {
    const double t00[] = {0.0, 0.0};
    const ComplexPoint ii{kImagUnit, kImagUnit};
    CHECK(std::abs(nvk::extended_poisson(ii, ii, t00) - Complex{1.0, 0.0}) < 1e-15);

    const double t0[] = {0.0};
    const ComplexPoint z{kImagUnit};
    const ComplexPoint w{Complex{0.0, 3.0}};
    CHECK(std::abs(nvk::extended_poisson(z, w, t0) - Complex{2.0 / 3.0, 0.0}) < 1e-15);
}

TEST_CASE("extended_poisson: all three displayed forms agree") {
    nvk::Rng rng(71);
    for (int k = 0; k < 60; ++k) {
        auto pts = nvk::sample_offreal_points(2, 2, 4000 + k);
        const double t[] = {rng.uniform(-6, 6), rng.uniform(-6, 6)};
        const Complex a = nvk::extended_poisson(pts[0], pts[1], t);
        const Complex b = oracle::extended_poisson_sum_form(pts[0], pts[1], t);
        const Complex c = oracle::extended_poisson_difference_form(pts[0], pts[1], t);
        CHECK(std::abs(a - b) < 1e-14);
        CHECK(std::abs(a - c) < 1e-14);
    }
}

TEST_CASE("extended_poisson: diagonal equals the Poisson kernel on C^{+n}") {
    auto pts = nvk::sample_upper_points(2, 10, 9);
    nvk::Rng rng(10);
    for (const auto& z : pts) {
        const double t[] = {rng.uniform(-4, 4), rng.uniform(-4, 4)};
        CHECK(std::abs(nvk::extended_poisson(z, z, t) - Complex{nvk::poisson_kernel(z, t), 0.0}) <
              1e-14);
    }
}

TEST_CASE("extended_poisson: Hermitian in its two slots") {
    auto pts = nvk::sample_offreal_points(3, 2, 77);
    nvk::Rng rng(78);
    const double t[] = {rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
    const Complex a = nvk::extended_poisson(pts[0], pts[1], t);
    const Complex b = nvk::extended_poisson(pts[1], pts[0], t);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
}

TEST_CASE("mixed_rho_vectors: counts and lexicographic order") {
    CHECK(nvk::mixed_rho_vectors(1).empty());
    const auto two = nvk::mixed_rho_vectors(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<int>{-1, 1});
    CHECK(two[1] == std::vector<int>{1, -1});
    // n = 3: 3^3 - 2*2^3 + 1 = 12 vectors containing both signs.
    CHECK(nvk::mixed_rho_vectors(3).size() == 12);
}

TEST_CASE("kernel_difference_check: identity holds off the real axes") {
    nvk::Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        auto zw = nvk::sample_offreal_points(2, 2, 5000 + k);
        const double t[] = {rng.uniform(-6, 6), rng.uniform(-6, 6)};
        CHECK(nvk::kernel_difference_check(zw[0], zw[1], t) < 1e-13);
    }
}

TEST_CASE("kernel_difference_check: z = w special case and n = 1") {
    auto pts = nvk::sample_upper_points(2, 20, 6);
    nvk::Rng rng(7);
    for (const auto& z : pts) {
        const double t[] = {rng.uniform(-6, 6), rng.uniform(-6, 6)};
        CHECK(nvk::kernel_difference_check(z, z, t) < 1e-13);
    }
    auto line = nvk::sample_offreal_points(1, 20, 8);
    for (const auto& z : line) {
        const double t[] = {rng.uniform(-6, 6)};
        CHECK(nvk::kernel_difference_check(z, line[0], t) < 1e-14);
    }
}
