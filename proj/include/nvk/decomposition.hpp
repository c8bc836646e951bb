#pragma once

// Decomposition machinery for Herglotz-Nevanlinna functions.
//
// The central object is the Poisson-type function of a growth-bounded
// positive measure mu,
//     D(z,w) = pi^{-n} int prod_l ((t_l - z_l)(t_l - conj(w_l)))^{-1} dmu(t),
// positive semi-definite on C^{+n} x C^{+n} and extendable by the same
// formula to (C\R)^n. For a function with representation data (a, b, mu) and
// a Nevanlinna-compliant mu, the difference q(z) - conj(q(w)) splits as
//     sum_j b_j (z_j - conj(w_j))
//       + (2i)^{-(n-1)} prod_j (z_j - conj(w_j)) * D(z,w),
// and the Nevanlinna kernel
//     K_q(z,w) = (2i)^{n-1} (q(z) - conj(q(w))) / prod_j (z_j - conj(w_j))
// is positive semi-definite exactly when q is Herglotz-Nevanlinna. Off the
// upper orthant the same split picks up an explicit error term built from the
// mixed N-term integrals.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"
#include "nvk/hn_function.hpp"
#include "nvk/kernels.hpp"
#include "nvk/measure.hpp"
#include "nvk/psd.hpp"
#include "nvk/quadrature.hpp"
#include "nvk/sampling.hpp"

namespace nvk {

enum class EvalRoute { Auto, Quadrature, ClosedForm };

class PoissonTypeFunction {
  public:
    using ClosedForm = std::function<Complex(const ComplexPoint&, const ComplexPoint&)>;

    static PoissonTypeFunction from_measure(MeasureSpec mu, QuadratureConfig cfg = {}) {
        return PoissonTypeFunction(std::move(mu), cfg, nullptr, "");
    }

    /// Attaches a closed form; by default its agreement with the quadrature
    /// route is spot-checked on 20 pseudo-random pairs at construction.
    static PoissonTypeFunction with_closed_form(MeasureSpec mu, ClosedForm form,
                                                std::string label, QuadratureConfig cfg = {},
                                                bool verify = true) {
        PoissonTypeFunction f(std::move(mu), cfg, std::move(form), std::move(label));
        if (verify) {
            const auto pairs = sample_upper_pairs(f.dim(), 20, 0xD15C0);
            for (const auto& [z, w] : pairs) {
                const Complex a = f.evaluate(z, w, EvalRoute::Quadrature);
                const Complex b = f.evaluate(z, w, EvalRoute::ClosedForm);
                if (std::abs(a - b) > 1e-6)
                    throw ValidationError(
                        "PoissonTypeFunction: closed form disagrees with quadrature");
            }
        }
        return f;
    }

    std::size_t dim() const { return mu_.dim(); }
    const MeasureSpec& measure() const { return mu_; }
    const QuadratureConfig& quadrature() const { return cfg_; }
    bool has_closed_form() const { return static_cast<bool>(closed_form_); }
    const std::string& label() const { return label_; }

    /// Value on (C\R)^n x (C\R)^n; on the upper orthant this is the
    /// Poisson-type function itself, elsewhere its symmetric extension.
    Complex evaluate(const ComplexPoint& z, const ComplexPoint& w,
                     EvalRoute route = EvalRoute::Auto) const {
        require_off_real(z, "PoissonTypeFunction::evaluate");
        require_off_real(w, "PoissonTypeFunction::evaluate");
        if (route == EvalRoute::Auto)
            route = closed_form_ ? EvalRoute::ClosedForm : EvalRoute::Quadrature;
        if (route == EvalRoute::ClosedForm) {
            if (!closed_form_)
                throw ValidationError("PoissonTypeFunction: no closed form attached");
            return closed_form_(z, w);
        }
        const std::size_t n = dim();
        std::vector<std::vector<double>> hints(n);
        for (std::size_t j = 0; j < n; ++j) hints[j] = {z[j].real(), w[j].real()};
        auto integrand = [&](std::span<const double> t) {
            Complex prod{1.0, 0.0};
            for (std::size_t l = 0; l < n; ++l)
                prod *= 1.0 / ((t[l] - z[l]) * (t[l] - std::conj(w[l])));
            return prod;
        };
        const double pi = 2.0 * std::acos(0.0);
        return integrate_measure(mu_, integrand, cfg_, hints) /
               std::pow(pi, static_cast<double>(n));
    }

    KernelFunction as_kernel(EvalRoute route = EvalRoute::Auto,
                             KernelDomain domain = KernelDomain::UpperHalfPlane) const {
        return KernelFunction{[f = *this, route](const ComplexPoint& z, const ComplexPoint& w) {
                                  return f.evaluate(z, w, route);
                              },
                              dim(), domain, KernelProvenance::PoissonType, label_};
    }

  private:
    PoissonTypeFunction(MeasureSpec mu, QuadratureConfig cfg, ClosedForm form, std::string label)
        : mu_(std::move(mu)), cfg_(cfg), closed_form_(std::move(form)),
          label_(std::move(label)) {}

    MeasureSpec mu_;
    QuadratureConfig cfg_;
    ClosedForm closed_form_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Nevanlinna kernel

/// K_q(z,w) = (2i)^{n-1} (q(z) - conj(q(w))) / prod_j (z_j - conj(w_j)).
/// For n = 1 this is the classical kernel (q(z) - conj(q(w)))/(z - conj(w)).
inline Complex nevanlinna_kernel(const std::function<Complex(const ComplexPoint&)>& q,
                                 const ComplexPoint& z, const ComplexPoint& w) {
    require_upper(z, "nevanlinna_kernel");
    require_upper(w, "nevanlinna_kernel");
    const std::size_t n = z.dim();
    return pow_two_i(n - 1) * (q(z) - std::conj(q(w))) / product_z_minus_wbar(z, w);
}

inline KernelFunction make_nevanlinna_kernel(std::function<Complex(const ComplexPoint&)> q,
                                             std::size_t n, std::string label = {}) {
    return KernelFunction{[q = std::move(q)](const ComplexPoint& z, const ComplexPoint& w) {
                              return nevanlinna_kernel(q, z, w);
                          },
                          n, KernelDomain::UpperHalfPlane, KernelProvenance::NevanlinnaKernel,
                          std::move(label)};
}

// ---------------------------------------------------------------------------
// The main decomposition

struct DecompositionOptions {
    double tolerance = 1e-6;
    EvalRoute d_route = EvalRoute::Auto;
    // Optional independent evaluator for q itself (e.g. a closed form); the
    // representation quadrature is used when absent.
    std::function<Complex(const ComplexPoint&)> lhs;
    // Closed form to attach to the returned Poisson-type function.
    PoissonTypeFunction::ClosedForm closed_form_d;
};

struct DecompositionCertificate {
    std::vector<double> d;
    PoissonTypeFunction D;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    bool uniqueness_guaranteed = false;  // the correspondence is unique when a = 0
};

/// Splits a representation-backed function per the main decomposition:
/// d = b and D = the Poisson-type function of mu. Residuals of the split are
/// sampled on the supplied pairs; exceeding the tolerance is an error, since
/// for certified data the identity must hold up to quadrature noise.
inline DecompositionCertificate decompose(
    const HNData& data, std::span<const std::pair<ComplexPoint, ComplexPoint>> pairs,
    const DecompositionOptions& opts = {}, const QuadratureConfig& cfg = {}) {
    if (!data.nevanlinna_certified() && !data.measure.is_zero())
        throw ValidationError("decompose: measure must carry a Nevanlinna certificate");

    const std::size_t n = data.dim();
    PoissonTypeFunction D =
        opts.closed_form_d
            ? PoissonTypeFunction::with_closed_form(data.measure, opts.closed_form_d,
                                                    "certificate", cfg, /*verify=*/false)
            : PoissonTypeFunction::from_measure(data.measure, cfg);

    auto q = opts.lhs;
    if (!q) q = HNFunction::data_backed(data, cfg).evaluator();

    DecompositionCertificate cert{data.b,
                                  std::move(D),
                                  {},
                                  0.0,
                                  opts.tolerance,
                                  false,
                                  data.a == 0.0};
    const Complex prefactor_unit = pow_two_i(n - 1);
    for (const auto& [z, w] : pairs) {
        Complex rhs{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) rhs += cert.d[j] * (z[j] - std::conj(w[j]));
        const Complex dval = cert.D.evaluate(z, w, opts.d_route);
        rhs += product_z_minus_wbar(z, w) * dval / prefactor_unit;
        const double residual = std::abs(q(z) - std::conj(q(w)) - rhs);
        cert.residuals.push_back(residual);
        cert.max_residual = std::max(cert.max_residual, residual);
    }
    cert.verdict = cert.max_residual <= cert.tolerance;
    if (!cert.verdict)
        throw CertificateFailureError("decompose: residual " +
                                      std::to_string(cert.max_residual) +
                                      " exceeds tolerance");
    return cert;
}

/// Reconstructs q from (a, b, D) alone:
///   q(z) = (a - i D(i1,i1)) + sum_j b_j z_j
///          + (2i)^{-(n-1)} prod_j (z_j + i) * D(z, i1).
inline Complex d_representation(double a, std::span<const double> b,
                                const PoissonTypeFunction& D, const ComplexPoint& z,
                                EvalRoute route = EvalRoute::Auto) {
    require_upper(z, "d_representation");
    const std::size_t n = D.dim();
    const ComplexPoint i1 = imaginary_unit_point(n);
    Complex v{a, 0.0};
    v += -kImagUnit * D.evaluate(i1, i1, route);
    for (std::size_t j = 0; j < n; ++j) v += b[j] * z[j];
    Complex prod{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) prod *= z[j] + kImagUnit;
    v += prod * D.evaluate(z, i1, route) / pow_two_i(n - 1);
    return v;
}

// ---------------------------------------------------------------------------
// Stieltjes inversion

struct StieltjesResult {
    std::vector<double> y_values;
    std::vector<Complex> integrals;  // int psi(x) prod_j y F(x+iy, x+iy) dx per y
    Complex value_at_min_y{0.0, 0.0};
    Complex estimate{0.0, 0.0};  // linear-in-y extrapolation of the last two values
    bool stabilized = false;
};

/// Recovers int psi dmu from boundary values of the y-weighted kernel
/// diagonal. `kernel` is any two-point kernel on C^{+n}; psi must decay at
/// least like prod (1+x_j^2)^{-1} for the outer integral to converge.
inline StieltjesResult stieltjes_invert(
    const std::function<Complex(const ComplexPoint&, const ComplexPoint&)>& kernel,
    std::size_t n, const std::function<double(std::span<const double>)>& psi,
    std::span<const double> y_schedule, const QuadratureConfig& cfg,
    const BreakpointProvider& peaks = {}) {
    if (y_schedule.empty()) throw ValidationError("stieltjes_invert: empty y schedule");
    StieltjesResult result;
    for (double y : y_schedule) {
        if (!(y > 0.0)) throw ValidationError("stieltjes_invert: y values must be positive");
        auto integrand = [&](std::span<const double> x) -> Complex {
            std::vector<Complex> coords(n);
            for (std::size_t j = 0; j < n; ++j) coords[j] = Complex{x[j], y};
            const ComplexPoint zy{std::move(coords)};
            double weight = psi(x);
            for (std::size_t j = 0; j < n; ++j) weight *= y;
            return weight * kernel(zy, zy);
        };
        result.y_values.push_back(y);
        result.integrals.push_back(integrate_over_rn(n, integrand, cfg, peaks));
    }
    const std::size_t k = result.integrals.size();
    result.value_at_min_y = result.integrals.back();
    if (k >= 2) {
        const Complex delta = result.integrals[k - 1] - result.integrals[k - 2];
        const double y1 = result.y_values[k - 2], y2 = result.y_values[k - 1];
        result.estimate = result.integrals[k - 1] + delta * y2 / (y1 - y2);
        if (k >= 3) {
            const Complex prev = result.integrals[k - 2] - result.integrals[k - 3];
            result.stabilized = std::abs(delta) <= std::abs(prev) + 1e-12;
        } else {
            result.stabilized = true;
        }
    } else {
        result.estimate = result.value_at_min_y;
        result.stabilized = true;
    }
    if (!result.stabilized)
        throw NonConvergentError("stieltjes_invert: boundary values did not stabilize");
    return result;
}

/// Poisson-type overload: derives quadrature breakpoints from the measure
/// (atom locations; curve preimages) so narrow boundary peaks are not missed.
inline StieltjesResult stieltjes_invert(const PoissonTypeFunction& F,
                                        const std::function<double(std::span<const double>)>& psi,
                                        std::span<const double> y_schedule,
                                        const QuadratureConfig& cfg,
                                        EvalRoute route = EvalRoute::Auto) {
    const std::size_t n = F.dim();
    BreakpointProvider peaks;
    if (const auto* atoms = std::get_if<MeasureSpec::Atoms>(&F.measure().data())) {
        std::vector<std::vector<double>> locs(n);
        for (const auto& a : atoms->atoms)
            for (std::size_t j = 0; j < n; ++j) locs[j].push_back(a.location[j]);
        peaks = [locs](std::size_t dim, std::span<const double>) { return locs[dim]; };
    } else if (const auto* curve = std::get_if<MeasureSpec::CurvePushforward>(&F.measure().data());
               curve && curve->curve.preimages) {
        // The diagonal kernel peaks where x lies on the curve; given the
        // outer coordinates, the curve point determines the inner ones.
        const CurveSpec spec = curve->curve;
        peaks = [spec, n](std::size_t dim, std::span<const double> outer) {
            std::vector<double> cuts;
            if (dim == 0) return cuts;
            std::vector<double> point(n);
            for (double t : spec.preimages(0, outer[0])) {
                spec.map(t, point);
                cuts.push_back(point[dim]);
            }
            return cuts;
        };
    }
    auto kernel = [&F, route](const ComplexPoint& z, const ComplexPoint& w) {
        return F.evaluate(z, w, route);
    };
    return stieltjes_invert(kernel, n, psi, y_schedule, cfg, peaks);
}

// ---------------------------------------------------------------------------
// Pluriharmonicity probe

struct PluriharmonicReport {
    // mixed[j][k] approximates d^2 u / dz_j dconj(z_k) for
    // u(z) = prod Im[z_j] * F(z,z); all entries vanish when u is pluriharmonic.
    std::vector<std::vector<Complex>> mixed;
    double defect = 0.0;
};

/// Central finite differences of the four second-order real partials per
/// Wirtinger pair, assembled into d^2 u / dz_j dconj(z_k).
inline PluriharmonicReport pluriharmonic_defect(
    const std::function<Complex(const ComplexPoint&)>& kernel_diagonal, const ComplexPoint& z,
    double h = 1e-3) {
    const std::size_t n = z.dim();
    require_upper(z, "pluriharmonic_defect");
    for (std::size_t j = 0; j < n; ++j)
        if (z[j].imag() <= 10.0 * h)
            throw DomainError("pluriharmonic_defect: point too close to the boundary for h");

    auto u = [&](const ComplexPoint& p) {
        double im = 1.0;
        for (std::size_t j = 0; j < n; ++j) im *= p[j].imag();
        return im * kernel_diagonal(p).real();
    };
    auto shifted = [&](std::size_t j, double dx, double dy, std::size_t k, double dx2,
                       double dy2) {
        ComplexPoint p = z;
        p[j] += Complex{dx, dy};
        p[k] += Complex{dx2, dy2};
        return u(p);
    };

    PluriharmonicReport report;
    report.mixed.assign(n, std::vector<Complex>(n, Complex{0.0, 0.0}));
    const double u0 = u(z);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            Complex value;
            if (j == k) {
                const double uxx =
                    (shifted(j, h, 0, j, 0, 0) - 2.0 * u0 + shifted(j, -h, 0, j, 0, 0)) / (h * h);
                const double uyy =
                    (shifted(j, 0, h, j, 0, 0) - 2.0 * u0 + shifted(j, 0, -h, j, 0, 0)) / (h * h);
                value = Complex{(uxx + uyy) / 4.0, 0.0};
            } else {
                auto cross = [&](double ax, double ay, double bx, double by) {
                    return (shifted(j, ax, ay, k, bx, by) - shifted(j, ax, ay, k, -bx, -by) -
                            shifted(j, -ax, -ay, k, bx, by) + shifted(j, -ax, -ay, k, -bx, -by)) /
                           (4.0 * h * h);
                };
                const double uxx = cross(h, 0, h, 0);
                const double uyy = cross(0, h, 0, h);
                const double uxy = cross(h, 0, 0, h);
                const double uyx = cross(0, h, h, 0);
                value = Complex{(uxx + uyy) / 4.0, (uxy - uyx) / 4.0};
            }
            report.mixed[j][k] = value;
            report.mixed[k][j] = std::conj(value);
            report.defect = std::max(report.defect, std::abs(value));
        }
    }
    return report;
}

inline PluriharmonicReport pluriharmonic_defect(const PoissonTypeFunction& F,
                                                const ComplexPoint& z, double h = 1e-3,
                                                EvalRoute route = EvalRoute::Auto) {
    return pluriharmonic_defect(
        [&F, route](const ComplexPoint& p) { return F.evaluate(p, p, route); }, z, h);
}

// ---------------------------------------------------------------------------
// Symmetric extension: error term and full split

/// E(z,w) = sum over mixed rho of (2i/pi^n) int prod_j N_{rho_j} dmu with the
/// first N-term argument drawn from z, i or w according to rho_j. Vanishes on
/// C^{+n} x C^{+n} for Nevanlinna-compliant measures; off the upper orthant
/// it is exactly what the plain decomposition misses.
inline Complex symmetric_error_term(const MeasureSpec& mu, const ComplexPoint& z,
                                    const ComplexPoint& w, const QuadratureConfig& cfg = {}) {
    require_off_real(z, "symmetric_error_term");
    require_off_real(w, "symmetric_error_term");
    const std::size_t n = mu.dim();
    if (z.dim() != n || w.dim() != n)
        throw ValidationError("symmetric_error_term: dimension mismatch");

    std::vector<std::vector<double>> hints(n);
    for (std::size_t j = 0; j < n; ++j) hints[j] = {z[j].real(), w[j].real()};

    Complex sum{0.0, 0.0};
    for (const auto& rho : mixed_rho_vectors(n)) {
        auto term = [&](std::span<const double> t) { return mixed_term_product(rho, z, w, t); };
        sum += integrate_measure(mu, term, cfg, hints);
    }
    const double pi = 2.0 * std::acos(0.0);
    return Complex{0.0, 2.0} * sum / std::pow(pi, static_cast<double>(n));
}

/// Residual of the symmetric-extension split
///   f(z) - conj(f(w)) = sum_j d_j (z_j - conj(w_j))
///     + (2i)^{-(n-1)} prod_j (z_j - conj(w_j)) D_sym(z,w) - E(z,w).
inline double symmetric_decomposition_residual(
    const std::function<Complex(const ComplexPoint&)>& f_sym, std::span<const double> d,
    const PoissonTypeFunction& D, const ComplexPoint& z, const ComplexPoint& w,
    EvalRoute route = EvalRoute::Auto) {
    const std::size_t n = D.dim();
    Complex rhs{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) rhs += d[j] * (z[j] - std::conj(w[j]));
    rhs += product_z_minus_wbar(z, w) * D.evaluate(z, w, route) / pow_two_i(n - 1);
    rhs -= symmetric_error_term(D.measure(), z, w, D.quadrature());
    return std::abs(f_sym(z) - std::conj(f_sym(w)) - rhs);
}

// ---------------------------------------------------------------------------
// Loewner decompositions

/// Residual of h(z) - conj(h(w)) = sum_l (z_l - conj(w_l)) F_l(z,w).
inline double loewner_residual(const std::function<Complex(const ComplexPoint&)>& h,
                               std::span<const KernelFunction> factors, const ComplexPoint& z,
                               const ComplexPoint& w) {
    Complex rhs{0.0, 0.0};
    for (std::size_t l = 0; l < factors.size(); ++l)
        rhs += (z[l] - std::conj(w[l])) * factors[l](z, w);
    return std::abs(h(z) - std::conj(h(w)) - rhs);
}

/// Residual of the kernel form of the same split:
///   K_h(z,w) = sum_l F_l(z,w) prod_{j != l} 2i/(z_j - conj(w_j)).
inline double loewner_kernel_identity_residual(const std::function<Complex(const ComplexPoint&)>& h,
                                               std::span<const KernelFunction> factors,
                                               const ComplexPoint& z, const ComplexPoint& w) {
    const std::size_t n = z.dim();
    Complex rhs{0.0, 0.0};
    for (std::size_t l = 0; l < factors.size(); ++l) {
        Complex prod{1.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == l) continue;
            prod *= Complex{0.0, 2.0} / (z[j] - std::conj(w[j]));
        }
        rhs += factors[l](z, w) * prod;
    }
    const Complex q_of = nevanlinna_kernel(h, z, w);
    return std::abs(q_of - rhs);
}

// ---------------------------------------------------------------------------
// Symmetric extension of the inverse-sum fixture: the 16 orthant forms

/// Sign pattern of a point of (C\R)^2: bit j set means Im[z_j] < 0.
inline unsigned orthant_code(const ComplexPoint& z) {
    require_off_real(z, "orthant_code");
    unsigned code = 0;
    for (std::size_t j = 0; j < z.dim(); ++j)
        if (z[j].imag() < 0.0) code |= 1u << j;
    return code;
}

inline std::string orthant_string(unsigned code, std::size_t n) {
    std::string s;
    for (std::size_t j = 0; j < n; ++j) s += (code & (1u << j)) ? '-' : '+';
    return s;
}

/// Closed-form symmetric extension of the Poisson-type function of the
/// antidiagonal curve measure (the inverse-sum fixture), one rational
/// expression per orthant pair.
inline Complex inverse_sum_d_sym(const ComplexPoint& z, const ComplexPoint& w) {
    if (z.dim() != 2 || w.dim() != 2)
        throw ValidationError("inverse_sum_d_sym: two-variable fixture");
    const Complex two_i{0.0, 2.0};
    const Complex z1 = z[0], z2 = z[1];
    const Complex w1 = std::conj(w[0]), w2 = std::conj(w[1]);
    const unsigned zc = orthant_code(z), wc = orthant_code(w);
    switch (zc | (wc << 2)) {
        // w in C+ x C+
        case 0b0000: return two_i * (z1 + z2 - w1 - w2) / ((z1 - w1) * (z2 - w2) * (z1 + z2) * (w1 + w2));
        case 0b0001: return two_i / ((z1 + w2) * (z2 - w2) * (w1 + w2));
        case 0b0010: return two_i / ((z2 + w1) * (z1 - w1) * (w1 + w2));
        case 0b0011: return two_i * (z1 + z2 + w1 + w2) / ((z1 + w2) * (z2 + w1) * (z1 + z2) * (w1 + w2));
        // w in C- x C+
        case 0b0100: return two_i / ((z1 + z2) * (z2 + w1) * (z2 - w2));
        case 0b0101: return two_i * (z1 - z2 - w1 + w2) / ((z1 - w1) * (z2 + w1) * (z1 + w2) * (z2 - w2));
        case 0b0110: return Complex{0.0, 0.0};
        case 0b0111: return -two_i / ((z1 + z2) * (z1 - w1) * (z1 + w2));
        // w in C+ x C-
        case 0b1000: return two_i / ((z1 + z2) * (z1 - w1) * (z1 + w2));
        case 0b1001: return Complex{0.0, 0.0};
        case 0b1010: return two_i * (-z1 + z2 + w1 - w2) / ((z1 - w1) * (z2 + w1) * (z1 + w2) * (z2 - w2));
        case 0b1011: return -two_i / ((z1 + z2) * (z2 + w1) * (z2 - w2));
        // w in C- x C-
        case 0b1100: return -two_i * (z1 + z2 + w1 + w2) / ((z1 + w2) * (z2 + w1) * (z1 + z2) * (w1 + w2));
        case 0b1101: return -two_i / ((z1 - w1) * (z2 + w1) * (w1 + w2));
        case 0b1110: return -two_i / ((z2 - w2) * (z1 + w2) * (w1 + w2));
        case 0b1111: return two_i * (-z1 - z2 + w1 + w2) / ((z1 + z2) * (z1 - w1) * (z2 - w2) * (w1 + w2));
    }
    throw ValidationError("inverse_sum_d_sym: unreachable orthant code");
}

struct DSymTableRow {
    std::string z_orthant;  // "+-" style, coordinate order
    std::string w_orthant;
    std::string expression_id;
    std::string formula;  // W_j stands for conj(w_j)
};

/// Machine-readable listing of the 16 orthant-pair closed forms.
inline const std::array<DSymTableRow, 16>& d_sym_table() {
    static const std::array<DSymTableRow, 16> rows = {{
        {"++", "++", "pp_pp", "2i*(z1+z2-W1-W2)/((z1-W1)*(z2-W2)*(z1+z2)*(W1+W2))"},
        {"-+", "++", "mp_pp", "2i/((z1+W2)*(z2-W2)*(W1+W2))"},
        {"+-", "++", "pm_pp", "2i/((z2+W1)*(z1-W1)*(W1+W2))"},
        {"--", "++", "mm_pp", "2i*(z1+z2+W1+W2)/((z1+W2)*(z2+W1)*(z1+z2)*(W1+W2))"},
        {"++", "-+", "pp_mp", "2i/((z1+z2)*(z2+W1)*(z2-W2))"},
        {"-+", "-+", "mp_mp", "2i*(z1-z2-W1+W2)/((z1-W1)*(z2+W1)*(z1+W2)*(z2-W2))"},
        {"+-", "-+", "pm_mp", "0"},
        {"--", "-+", "mm_mp", "-2i/((z1+z2)*(z1-W1)*(z1+W2))"},
        {"++", "+-", "pp_pm", "2i/((z1+z2)*(z1-W1)*(z1+W2))"},
        {"-+", "+-", "mp_pm", "0"},
        {"+-", "+-", "pm_pm", "2i*(-z1+z2+W1-W2)/((z1-W1)*(z2+W1)*(z1+W2)*(z2-W2))"},
        {"--", "+-", "mm_pm", "-2i/((z1+z2)*(z2+W1)*(z2-W2))"},
        {"++", "--", "pp_mm", "-2i*(z1+z2+W1+W2)/((z1+W2)*(z2+W1)*(z1+z2)*(W1+W2))"},
        {"-+", "--", "mp_mm", "-2i/((z1-W1)*(z2+W1)*(W1+W2))"},
        {"+-", "--", "pm_mm", "-2i/((z2-W2)*(z1+W2)*(W1+W2))"},
        {"--", "--", "mm_mm", "2i*(-z1-z2+W1+W2)/((z1+z2)*(z1-W1)*(z2-W2)*(W1+W2))"},
    }};
    return rows;
}

}  // namespace nvk
