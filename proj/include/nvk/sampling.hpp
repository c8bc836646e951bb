#pragma once

// Deterministic point samplers. Randomness comes from raw mt19937_64 output
// (no standard-library distributions), so identical seeds give identical
// points on every platform.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nvk/complex_point.hpp"

namespace nvk {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform01() * std::log(hi / lo));
    }

    bool coin() { return (gen_() & 1u) != 0; }

  private:
    std::mt19937_64 gen_;
};

/// m points of C^{+n}: real parts uniform in [-5,5], imaginary parts
/// log-uniform in [0.1, 10].
inline std::vector<ComplexPoint> sample_upper_points(std::size_t n, std::size_t m,
                                                     std::uint64_t seed) {
    if (n < 1 || m < 1) throw ValidationError("sample_upper_points: n and m must be >= 1");
    Rng rng(seed);
    std::vector<ComplexPoint> points;
    points.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Complex> coords(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double re = rng.uniform(-5.0, 5.0);
            const double im = rng.log_uniform(0.1, 10.0);
            coords[j] = Complex{re, im};
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

/// m points of (C\R)^n: upper-half-plane marginals with a fair sign flip of
/// each imaginary part.
inline std::vector<ComplexPoint> sample_offreal_points(std::size_t n, std::size_t m,
                                                       std::uint64_t seed) {
    if (n < 1 || m < 1) throw ValidationError("sample_offreal_points: n and m must be >= 1");
    Rng rng(seed);
    std::vector<ComplexPoint> points;
    points.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Complex> coords(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double re = rng.uniform(-5.0, 5.0);
            const double im = rng.log_uniform(0.1, 10.0);
            coords[j] = Complex{re, rng.coin() ? im : -im};
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

/// m points of D^n, radius area-uniform up to max_radius.
inline std::vector<ComplexPoint> sample_disk_points(std::size_t n, std::size_t m,
                                                    std::uint64_t seed, double max_radius = 0.9) {
    if (n < 1 || m < 1) throw ValidationError("sample_disk_points: n and m must be >= 1");
    if (!(max_radius > 0.0) || max_radius >= 1.0)
        throw ValidationError("sample_disk_points: max_radius must lie in (0,1)");
    Rng rng(seed);
    const double two_pi = 4.0 * std::acos(0.0);
    std::vector<ComplexPoint> points;
    points.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Complex> coords(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double r = max_radius * std::sqrt(rng.uniform01());
            const double phi = two_pi * rng.uniform01();
            coords[j] = Complex{r * std::cos(phi), r * std::sin(phi)};
        }
        points.emplace_back(std::move(coords));
    }
    return points;
}

inline std::vector<std::pair<ComplexPoint, ComplexPoint>> sample_upper_pairs(std::size_t n,
                                                                             std::size_t m,
                                                                             std::uint64_t seed) {
    auto flat = sample_upper_points(n, 2 * m, seed);
    std::vector<std::pair<ComplexPoint, ComplexPoint>> pairs;
    pairs.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        pairs.emplace_back(std::move(flat[2 * k]), std::move(flat[2 * k + 1]));
    return pairs;
}

inline std::vector<std::pair<ComplexPoint, ComplexPoint>> sample_offreal_pairs(std::size_t n,
                                                                               std::size_t m,
                                                                               std::uint64_t seed) {
    auto flat = sample_offreal_points(n, 2 * m, seed);
    std::vector<std::pair<ComplexPoint, ComplexPoint>> pairs;
    pairs.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        pairs.emplace_back(std::move(flat[2 * k]), std::move(flat[2 * k + 1]));
    return pairs;
}

}  // namespace nvk
