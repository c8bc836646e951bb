#include <catch2/catch_amalgamated.hpp>

#include "nvk/sampling.hpp"

TEST_CASE("sample_upper_points: all imaginary parts positive, ranges respected") {
    const auto pts = nvk::sample_upper_points(2, 3, 7);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        REQUIRE(p.dim() == 2);
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(p[j].imag() > 0.0);
            CHECK(p[j].imag() >= 0.1);
            CHECK(p[j].imag() <= 10.0);
            CHECK(std::abs(p[j].real()) <= 5.0);
        }
    }
}

TEST_CASE("sample_upper_points: single point in the upper half-plane") {
    const auto pts = nvk::sample_upper_points(1, 1, 0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0][0].imag() > 0.0);
}

TEST_CASE("sample_upper_points: deterministic for a fixed seed") {
    const auto a = nvk::sample_upper_points(3, 5, 42);
    const auto b = nvk::sample_upper_points(3, 5, 42);
    CHECK(a == b);
    const auto c = nvk::sample_upper_points(3, 5, 43);
    CHECK(a != c);
}

TEST_CASE("sample_offreal_points: off the real axis, both signs occur") {
    const auto pts = nvk::sample_offreal_points(2, 40, 5);
    bool saw_lower = false, saw_upper = false;
    for (const auto& p : pts) {
        CHECK(p.off_real());
        for (std::size_t j = 0; j < 2; ++j) {
            saw_lower |= p[j].imag() < 0.0;
            saw_upper |= p[j].imag() > 0.0;
        }
    }
    CHECK(saw_lower);
    CHECK(saw_upper);
}

TEST_CASE("sample_disk_points: inside the radius bound") {
    const auto pts = nvk::sample_disk_points(2, 25, 11, 0.9);
    for (const auto& p : pts)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(p[j]) <= 0.9);
}

TEST_CASE("samplers reject degenerate arguments") {
    CHECK_THROWS_AS(nvk::sample_upper_points(0, 1, 0), nvk::ValidationError);
    CHECK_THROWS_AS(nvk::sample_upper_points(1, 0, 0), nvk::ValidationError);
    CHECK_THROWS_AS(nvk::sample_disk_points(1, 1, 0, 1.5), nvk::ValidationError);
}
