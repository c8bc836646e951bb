#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nvk/errors.hpp"

namespace nvk {

using Complex = std::complex<double>;

inline constexpr Complex kImagUnit{0.0, 1.0};

/// Half-plane membership of a single coordinate.
enum class HalfPlane { Upper, Lower, Real };

/// A point of C^n with per-coordinate half-plane classification.
struct ComplexPoint {
    std::vector<Complex> c;

    ComplexPoint() = default;
    explicit ComplexPoint(std::vector<Complex> coords) : c(std::move(coords)) {}
    ComplexPoint(std::initializer_list<Complex> coords) : c(coords) {}

    std::size_t dim() const { return c.size(); }
    Complex& operator[](std::size_t j) { return c[j]; }
    const Complex& operator[](std::size_t j) const { return c[j]; }

    HalfPlane half_plane(std::size_t j) const {
        const double im = c[j].imag();
        if (im > 0.0) return HalfPlane::Upper;
        if (im < 0.0) return HalfPlane::Lower;
        return HalfPlane::Real;
    }

    bool in_upper() const {
        for (const auto& z : c)
            if (!(z.imag() > 0.0)) return false;
        return true;
    }

    bool off_real() const {
        for (const auto& z : c)
            if (z.imag() == 0.0) return false;
        return true;
    }

    bool operator==(const ComplexPoint& other) const { return c == other.c; }
};

/// Point with every coordinate equal to i (the base point of several formulas).
inline ComplexPoint imaginary_unit_point(std::size_t n) {
    return ComplexPoint(std::vector<Complex>(n, kImagUnit));
}

inline void require_upper(const ComplexPoint& z, const char* who) {
    if (!z.in_upper())
        throw DomainError(std::string(who) + ": point must lie in the poly-upper half-plane");
}

inline void require_off_real(const ComplexPoint& z, const char* who) {
    if (!z.off_real())
        throw DomainError(std::string(who) + ": every coordinate must lie off the real axis");
}

/// prod_j (z_j - conj(w_j)); never zero when z, w share the upper half-plane.
inline Complex product_z_minus_wbar(const ComplexPoint& z, const ComplexPoint& w) {
    Complex p{1.0, 0.0};
    for (std::size_t j = 0; j < z.dim(); ++j) p *= z[j] - std::conj(w[j]);
    return p;
}

/// (2i)^k for integer k >= 0.
inline Complex pow_two_i(std::size_t k) {
    Complex p{1.0, 0.0};
    for (std::size_t j = 0; j < k; ++j) p *= Complex{0.0, 2.0};
    return p;
}

}  // namespace nvk
