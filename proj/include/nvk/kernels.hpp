#pragma once

// Pointwise kernels of the integral representation on the poly-upper
// half-plane. All kernels are implemented in factored product form (pole
// differences combined over a common denominator) to avoid cancellation for
// large |t|; the raw defining sums live in the test suite as oracles.
//
//   N_{-1}(z,t) = (z - i) / (2i (t - z)(t - i))
//   N_0(t)      = 1 / (1 + t^2)                      (real, independent of z)
//   N_1(z,t)    = -(conj(z) + i) / (2i (t + i)(t - conj(z)))
//   K_n(z,t)    = i (2 prod_l (N_{-1}(z_l,t_l) + N_0(t_l)) - prod_l N_0(t_l))
//   P_n(z,w,t)  = (2i)^{-n} prod_l (z_l - conj(w_l)) / ((t_l - z_l)(t_l - conj(w_l)))
//
// The difference identity links them: for z, w off the real axes,
//   (K_n(z,t) - conj(K_n(w,t))) / 2i
//     = P_n(z,w,t) - sum over mixed index vectors rho of prod_j N_{rho_j},
// where the first argument of each N term is z_j, i or w_j according to
// rho_j = -1, 0, 1, and "mixed" means rho contains both a -1 and a 1.

#include <cmath>
#include <span>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"

namespace nvk {

inline Complex n_term(int rho, Complex z, double t) {
    const Complex denom_2i{0.0, 2.0};
    switch (rho) {
        case 0:
            return Complex{1.0 / (1.0 + t * t), 0.0};
        case -1: {
            if (z.imag() == 0.0) throw DomainError("n_term: z must lie off the real axis");
            return (z - kImagUnit) / (denom_2i * (t - z) * (t - kImagUnit));
        }
        case 1: {
            if (z.imag() == 0.0) throw DomainError("n_term: z must lie off the real axis");
            const Complex zb = std::conj(z);
            return -(zb + kImagUnit) / (denom_2i * (t + kImagUnit) * (t - zb));
        }
        default:
            throw ValidationError("n_term: index must be -1, 0 or 1");
    }
}

/// Representation kernel K_n on (C\R)^n x R^n.
inline Complex kernel_Kn(const ComplexPoint& z, std::span<const double> t) {
    const std::size_t n = z.dim();
    require_off_real(z, "kernel_Kn");
    Complex prod_z{1.0, 0.0};  // prod_l (1/(t_l - z_l) - 1/(t_l + i))
    double prod_0 = 1.0;       // prod_l N_0(t_l) (up to the (2i)^n shared below)
    for (std::size_t l = 0; l < n; ++l) {
        prod_z *= (z[l] + kImagUnit) / ((t[l] - z[l]) * (t[l] + kImagUnit));
        prod_0 *= 1.0 / (1.0 + t[l] * t[l]);
    }
    const Complex two_i_n = pow_two_i(n);
    return kImagUnit * (2.0 * prod_z / two_i_n - Complex{prod_0, 0.0});
}

/// Poisson kernel of the poly-upper half-plane: prod_j Im[z_j]/|t_j - z_j|^2.
inline double poisson_kernel(const ComplexPoint& z, std::span<const double> t) {
    require_upper(z, "poisson_kernel");
    double p = 1.0;
    for (std::size_t j = 0; j < z.dim(); ++j) p *= z[j].imag() / std::norm(t[j] - z[j]);
    return p;
}

/// Two-argument extension of the Poisson kernel; collapses to poisson_kernel
/// on the diagonal z = w in the poly-upper half-plane.
inline Complex extended_poisson(const ComplexPoint& z, const ComplexPoint& w,
                                std::span<const double> t) {
    require_off_real(z, "extended_poisson");
    require_off_real(w, "extended_poisson");
    const std::size_t n = z.dim();
    Complex prod{1.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) {
        const Complex wb = std::conj(w[l]);
        prod *= (z[l] - wb) / ((t[l] - z[l]) * (t[l] - wb));
    }
    return prod / pow_two_i(n);
}

/// Variable selection for the mixed-index sum: -1 picks from z, 0 the unit i,
/// 1 picks from w.
inline Complex epsilon_choice(int rho, Complex zj, Complex wj) {
    switch (rho) {
        case -1: return zj;
        case 0: return kImagUnit;
        case 1: return wj;
        default: throw ValidationError("epsilon_choice: index must be -1, 0 or 1");
    }
}

/// All rho in {-1,0,1}^n containing both a -1 and a 1, lexicographic with
/// -1 < 0 < 1. Empty for n = 1.
inline std::vector<std::vector<int>> mixed_rho_vectors(std::size_t n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rho(n, -1);
    while (true) {
        bool has_minus = false, has_plus = false;
        for (int r : rho) {
            has_minus |= (r == -1);
            has_plus |= (r == 1);
        }
        if (has_minus && has_plus) out.push_back(rho);
        std::size_t j = n;
        while (j > 0) {
            if (rho[j - 1] < 1) {
                ++rho[j - 1];
                break;
            }
            rho[j - 1] = -1;
            --j;
        }
        if (j == 0) break;
    }
    return out;
}

/// prod_j N_{rho_j}(epsilon(z_j, w_j), t_j) for one index vector.
inline Complex mixed_term_product(std::span<const int> rho, const ComplexPoint& z,
                                  const ComplexPoint& w, std::span<const double> t) {
    Complex prod{1.0, 0.0};
    for (std::size_t j = 0; j < rho.size(); ++j)
        prod *= n_term(rho[j], epsilon_choice(rho[j], z[j], w[j]), t[j]);
    return prod;
}

/// Residual of the kernel difference identity at one point; identically zero
/// in exact arithmetic for z, w off the real axes and real t.
inline double kernel_difference_check(const ComplexPoint& z, const ComplexPoint& w,
                                      std::span<const double> t) {
    const std::size_t n = z.dim();
    const Complex lhs = (kernel_Kn(z, t) - std::conj(kernel_Kn(w, t))) / Complex{0.0, 2.0};
    Complex rhs = extended_poisson(z, w, t);
    for (const auto& rho : mixed_rho_vectors(n)) rhs -= mixed_term_product(rho, z, w, t);
    return std::abs(lhs - rhs);
}

}  // namespace nvk
