#pragma once

// Named fixtures: the reference measures, their Poisson-type functions in
// closed form, and the Loewner example pack. Everything here is also
// reachable from job files by name.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/decomposition.hpp"
#include "nvk/hn_function.hpp"
#include "nvk/measure.hpp"
#include "nvk/psd.hpp"

namespace nvk::catalog {

inline constexpr double kPi = std::numbers::pi;

// --- measures --------------------------------------------------------------

/// Lebesgue measure on R.
inline MeasureSpec lebesgue_1d() { return MeasureSpec::scaled_lebesgue({1.0}); }

/// Point mass pi^2 at the origin of R^2.
inline MeasureSpec dirac_pi2_origin() {
    return MeasureSpec::atoms(2, {{{0.0, 0.0}, kPi * kPi}});
}

/// Pushforward of pi * Lebesgue along t -> (t, -t); represents the
/// inverse-sum function.
inline MeasureSpec curve_antidiagonal_pi() {
    return MeasureSpec::curve_pushforward(antidiagonal_curve(), kPi);
}

inline std::optional<MeasureSpec> measure_by_name(const std::string& name) {
    if (name == "lebesgue-1d") return lebesgue_1d();
    if (name == "dirac-pi2-origin") return dirac_pi2_origin();
    if (name == "curve-antidiagonal-pi") return curve_antidiagonal_pi();
    if (name == "zero-2d") return MeasureSpec::zero(2);
    return std::nullopt;
}

// --- Poisson-type functions with closed forms --------------------------------

/// Lebesgue on R gives 2i/(z - conj(w)).
inline PoissonTypeFunction poisson_lebesgue_1d(QuadratureConfig cfg = {}, bool verify = false) {
    return PoissonTypeFunction::with_closed_form(
        lebesgue_1d(),
        [](const ComplexPoint& z, const ComplexPoint& w) {
            return Complex{0.0, 2.0} / (z[0] - std::conj(w[0]));
        },
        "poisson-lebesgue-1d", cfg, verify);
}

/// The point mass pi^2 delta_0 gives 1/(z1 conj(w1) z2 conj(w2)).
inline PoissonTypeFunction poisson_dirac(QuadratureConfig cfg = {}, bool verify = false) {
    return PoissonTypeFunction::with_closed_form(
        dirac_pi2_origin(),
        [](const ComplexPoint& z, const ComplexPoint& w) {
            return 1.0 / (z[0] * std::conj(w[0]) * z[1] * std::conj(w[1]));
        },
        "poisson-dirac-pi2", cfg, verify);
}

/// The antidiagonal curve measure; its closed form covers all 16 orthant
/// pairs of (C\R)^2 via the symmetric-extension table.
inline PoissonTypeFunction poisson_curve(QuadratureConfig cfg = {}, bool verify = false) {
    return PoissonTypeFunction::with_closed_form(
        curve_antidiagonal_pi(),
        [](const ComplexPoint& z, const ComplexPoint& w) { return inverse_sum_d_sym(z, w); },
        "poisson-curve-antidiagonal", cfg, verify);
}

inline std::optional<PoissonTypeFunction> poisson_by_name(const std::string& name,
                                                          QuadratureConfig cfg = {}) {
    if (name == "poisson-lebesgue-1d") return poisson_lebesgue_1d(cfg);
    if (name == "poisson-dirac-pi2") return poisson_dirac(cfg);
    if (name == "poisson-curve-antidiagonal") return poisson_curve(cfg);
    return std::nullopt;
}

// --- kernels ----------------------------------------------------------------

/// Constant-in-(z2,w2) kernel 2i/(z1 - conj(w1)) on C^{+2}. Positive
/// semi-definite but not Poisson-type: its Stieltjes inversion functional
/// vanishes in the boundary limit although the kernel does not.
inline KernelFunction non_poisson_witness() {
    return KernelFunction{[](const ComplexPoint& z, const ComplexPoint& w) {
                              return Complex{0.0, 2.0} / (z[0] - std::conj(w[0]));
                          },
                          2, KernelDomain::UpperHalfPlane, KernelProvenance::ClosedForm,
                          "non-poisson-witness"};
}

// --- Loewner examples ---------------------------------------------------------

/// h = i with the convex family F1 = 2 k1 i/(z1-conj(w1)), F2 = 2 k2 i/(z2-conj(w2)).
struct LoewnerExample {
    HNFunction h;
    std::vector<KernelFunction> factors;
    std::string name;
};

inline LoewnerExample loewner_constant_i(double k1 = 1.0) {
    const double k2 = 1.0 - k1;
    LoewnerExample ex{HNFunction::constant(kImagUnit, 2), {}, "loewner-constant-i"};
    ex.factors.push_back(KernelFunction{
        [k1](const ComplexPoint& z, const ComplexPoint& w) {
            return 2.0 * k1 * kImagUnit / (z[0] - std::conj(w[0]));
        },
        2, KernelDomain::UpperHalfPlane, KernelProvenance::ClosedForm, "2 k1 i/(z1-W1)"});
    ex.factors.push_back(KernelFunction{
        [k2](const ComplexPoint& z, const ComplexPoint& w) {
            return 2.0 * k2 * kImagUnit / (z[1] - std::conj(w[1]));
        },
        2, KernelDomain::UpperHalfPlane, KernelProvenance::ClosedForm, "2 k2 i/(z2-W2)"});
    return ex;
}

/// h = -(z1+z2)^{-1} with F1 = F2 = ((z1+z2)(conj(w1)+conj(w2)))^{-1}, a
/// rank-one factor that is positive semi-definite but not Poisson-type.
inline LoewnerExample loewner_inverse_sum() {
    auto factor = KernelFunction{[](const ComplexPoint& z, const ComplexPoint& w) {
                                     return 1.0 / ((z[0] + z[1]) *
                                                   (std::conj(w[0]) + std::conj(w[1])));
                                 },
                                 2, KernelDomain::UpperHalfPlane, KernelProvenance::ClosedForm,
                                 "1/((z1+z2)(W1+W2))"};
    return LoewnerExample{HNFunction::inverse_sum(), {factor, factor}, "loewner-inverse-sum"};
}

/// The failed Loewner rewrite of the inverse-sum split:
/// F(z,w) = (z1 - conj(w1))/(2i) * D(z,w) is Hermitian but not positive
/// semi-definite. The two points and the coefficient pair below push its
/// quadratic form to the exact negative value (4901 - 255 sqrt(377))/8528.
struct LoewnerCounterexample {
    KernelFunction kernel;
    std::vector<ComplexPoint> points;
    std::vector<Complex> coefficients;
    double expected_value;
};

inline LoewnerCounterexample loewner_counterexample(EvalRoute route = EvalRoute::ClosedForm,
                                                    QuadratureConfig cfg = {}) {
    auto D = poisson_curve(cfg);
    LoewnerCounterexample ex{
        KernelFunction{[D, route](const ComplexPoint& z, const ComplexPoint& w) {
                           return (z[0] - std::conj(w[0])) / Complex{0.0, 2.0} *
                                  D.evaluate(z, w, route);
                       },
                       2, KernelDomain::UpperHalfPlane, KernelProvenance::ClosedForm,
                       "(z1-W1)/(2i) * D"},
        {ComplexPoint{Complex{0.0, 1.0}, Complex{-2.0, 1.0}},
         ComplexPoint{Complex{2.0, 1.0}, Complex{0.0, 2.0}}},
        {},
        0.0};
    const double root377 = std::sqrt(377.0);
    ex.coefficients = {(root377 - 7.0) / 2132.0 * Complex{-33.0, -113.0}, Complex{1.0, 0.0}};
    ex.expected_value = (4901.0 - 255.0 * root377) / 8528.0;
    return ex;
}

// --- functions ----------------------------------------------------------------

inline std::optional<HNFunction> function_by_name(const std::string& name) {
    if (name == "inverse-sum") return HNFunction::inverse_sum();
    if (name == "dirac-poisson") return HNFunction::dirac_poisson();
    if (name == "curve-data") {
        return HNFunction::data_backed(HNData(0.0, {0.0, 0.0}, curve_antidiagonal_pi()));
    }
    return std::nullopt;
}

/// Product of Cauchy weights, the standard test function for the Stieltjes
/// inversion: psi(x) = prod_j (1+x_j^2)^{-1}.
inline double cauchy_product_psi(std::span<const double> x) {
    double p = 1.0;
    for (double v : x) p *= 1.0 / (1.0 + v * v);
    return p;
}

}  // namespace nvk::catalog
