#pragma once

// Dense Hermitian matrices and a cyclic complex Jacobi eigensolver.
//
// Each sweep annihilates every off-diagonal entry (p,q) in turn with the
// unitary plane rotation
//     U[p][p] = c,  U[p][q] = s e^{i phi},  U[q][p] = -s e^{-i phi},  U[q][q] = c,
// where a_pq = r e^{i phi}, tau = (a_qq - a_pp)/(2r) and t = sign(tau)/(|tau| +
// sqrt(1+tau^2)). Convergence is quadratic; sizes up to a few hundred are the
// intended regime.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"

namespace nvk {

class HermitianMatrix {
  public:
    explicit HermitianMatrix(std::size_t m) : m_(m), e_(m * m, Complex{0.0, 0.0}) {
        if (m == 0) throw ValidationError("HermitianMatrix: dimension must be >= 1");
    }

    /// Builds from arbitrary row-major entries, enforcing the Hermitian
    /// invariant by averaging with the conjugate transpose.
    static HermitianMatrix from_entries(std::size_t m, std::span<const Complex> raw) {
        if (raw.size() != m * m)
            throw ValidationError("HermitianMatrix: entry count does not match dimension");
        HermitianMatrix out(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out.e_[i * m + j] = 0.5 * (raw[i * m + j] + std::conj(raw[j * m + i]));
        for (std::size_t i = 0; i < m; ++i) out.e_[i * m + i] = Complex{out.e_[i * m + i].real(), 0.0};
        return out;
    }

    static HermitianMatrix from_generator(std::size_t m,
                                          const std::function<Complex(std::size_t, std::size_t)>& g) {
        std::vector<Complex> raw(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) raw[i * m + j] = g(i, j);
        return from_entries(m, raw);
    }

    std::size_t dim() const { return m_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * m_ + j]; }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < m_; ++i) t += e_[i * m_ + i].real();
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : e_) s += std::norm(v);
        return std::sqrt(s);
    }

    std::span<const Complex> entries() const { return e_; }

  private:
    std::size_t m_;
    std::vector<Complex> e_;
};

struct EigenSystem {
    std::vector<double> values;    // nondecreasing
    std::vector<Complex> vectors;  // column-major; column k is the eigenvector of values[k]
    int sweeps = 0;
};

/// Full eigensystem by cyclic Jacobi. Stops when the off-diagonal Frobenius
/// norm falls below 1e-14 * ||M||_F.
inline EigenSystem hermitian_eigensystem(const HermitianMatrix& matrix, bool with_vectors = true) {
    const std::size_t m = matrix.dim();
    std::vector<Complex> a(matrix.entries().begin(), matrix.entries().end());
    std::vector<Complex> v;
    if (with_vectors) {
        v.assign(m * m, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;
    }

    const double norm_f = matrix.frobenius_norm();
    const double threshold = 1e-14 * norm_f;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) s += 2.0 * std::norm(a[i * m + j]);
        return std::sqrt(s);
    };

    int sweeps = 0;
    constexpr int kMaxSweeps = 100;
    while (norm_f > 0.0 && off_norm() > threshold) {
        if (++sweeps > kMaxSweeps)
            throw NonConvergentError("hermitian_eigensystem: sweep budget exhausted");
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const Complex apq = a[p * m + q];
                const double r = std::abs(apq);
                if (r <= 1e-2 * threshold / static_cast<double>(m)) continue;
                const Complex phase = apq / r;
                const double tau = (a[q * m + q].real() - a[p * m + p].real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a[p * m + p].real();
                const double aqq = a[q * m + q].real();
                a[p * m + p] = app - t * r;
                a[q * m + q] = aqq + t * r;
                a[p * m + q] = Complex{0.0, 0.0};
                a[q * m + p] = Complex{0.0, 0.0};

                for (std::size_t k = 0; k < m; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a[k * m + p];
                    const Complex akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * std::conj(phase) * akq;
                    a[k * m + q] = s * phase * akp + c * akq;
                    a[p * m + k] = std::conj(a[k * m + p]);
                    a[q * m + k] = std::conj(a[k * m + q]);
                }
                if (with_vectors) {
                    for (std::size_t k = 0; k < m; ++k) {
                        const Complex vkp = v[k * m + p];
                        const Complex vkq = v[k * m + q];
                        v[k * m + p] = c * vkp - s * std::conj(phase) * vkq;
                        v[k * m + q] = s * phase * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * m + i].real() < a[j * m + j].real();
    });

    EigenSystem out;
    out.sweeps = sweeps;
    out.values.resize(m);
    for (std::size_t k = 0; k < m; ++k) out.values[k] = a[order[k] * m + order[k]].real();
    if (with_vectors) {
        out.vectors.resize(m * m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < m; ++i) out.vectors[k * m + i] = v[i * m + order[k]];
    }
    return out;
}

/// Eigenvalues only, in nondecreasing order.
inline std::vector<double> hermitian_eigenvalues(const HermitianMatrix& matrix) {
    return hermitian_eigensystem(matrix, /*with_vectors=*/false).values;
}

}  // namespace nvk
