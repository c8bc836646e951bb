#pragma once

// Herglotz-Nevanlinna functions as evaluable objects.
//
// A function is either backed by its representation data (a, b, mu),
//     q(z) = a + sum_l b_l z_l + pi^{-n} int K_n(z,t) dmu(t),
// or by one of four closed forms used as fixtures throughout the test and
// scenario suites. The representation formula stays meaningful for every
// z off the real axes; evaluating it there yields the symmetric extension,
// which in general differs from the analytic continuation.

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"
#include "nvk/kernels.hpp"
#include "nvk/measure.hpp"
#include "nvk/quadrature.hpp"

namespace nvk {

/// Representation triple (a, b, mu) plus an optional certificate that mu
/// satisfies the Nevanlinna condition on a sample.
struct HNData {
    double a = 0.0;
    std::vector<double> b;
    MeasureSpec measure;
    std::optional<NevanlinnaReport> certificate;

    HNData(double a_, std::vector<double> b_, MeasureSpec mu)
        : a(a_), b(std::move(b_)), measure(std::move(mu)) {
        if (b.size() != measure.dim())
            throw ValidationError("HNData: coefficient vector must match the measure dimension");
        for (double v : b)
            if (!(v >= 0.0)) throw ValidationError("HNData: b coefficients must be >= 0");
    }

    std::size_t dim() const { return measure.dim(); }
    bool nevanlinna_certified() const { return certificate && certificate->verdict; }
};

/// Attaches a sampled Nevanlinna-condition certificate to the data.
inline HNData certify_nevanlinna(HNData data, std::span<const ComplexPoint> points, double tol,
                                 const QuadratureConfig& cfg = {}) {
    data.certificate = check_nevanlinna(data.measure, points, tol, cfg);
    return data;
}

class HNFunction {
  public:
    enum class Kind { DataBacked, Constant, Affine, InverseSum, DiracPoisson };

    static HNFunction data_backed(HNData data, QuadratureConfig cfg = {}) {
        HNFunction f(Kind::DataBacked, data.dim());
        f.data_ = std::move(data);
        f.cfg_ = cfg;
        return f;
    }

    /// q = a + ic with c >= 0.
    static HNFunction constant(Complex value, std::size_t n) {
        if (!(value.imag() >= 0.0))
            throw ValidationError("HNFunction: constant needs non-negative imaginary part");
        HNFunction f(Kind::Constant, n);
        f.const_value_ = value;
        return f;
    }

    static HNFunction affine(double a, std::vector<double> b) {
        for (double v : b)
            if (!(v >= 0.0)) throw ValidationError("HNFunction: affine slopes must be >= 0");
        const std::size_t n = b.size();
        HNFunction f(Kind::Affine, n);
        f.affine_a_ = a;
        f.affine_b_ = std::move(b);
        return f;
    }

    /// q(z1,z2) = -(z1+z2)^{-1}.
    static HNFunction inverse_sum() { return HNFunction(Kind::InverseSum, 2); }

    /// The function represented by the point mass pi^2 at the origin of R^2.
    /// It violates the Nevanlinna condition, so it is *not* Herglotz-
    /// Nevanlinna; it exists as the standard counterexample fixture.
    static HNFunction dirac_poisson() { return HNFunction(Kind::DiracPoisson, 2); }

    Kind kind() const { return kind_; }
    std::size_t dim() const { return n_; }
    const HNData* data() const { return data_ ? &*data_ : nullptr; }
    const QuadratureConfig& quadrature() const { return cfg_; }

    Complex evaluate(const ComplexPoint& z) const {
        require_upper(z, "HNFunction::evaluate");
        return eval_impl(z);
    }

    /// Value of the symmetric extension; coincides with evaluate on C^{+n}.
    Complex evaluate_symmetric(const ComplexPoint& z) const {
        require_off_real(z, "HNFunction::evaluate_symmetric");
        return eval_impl(z);
    }

    std::function<Complex(const ComplexPoint&)> evaluator() const {
        return [f = *this](const ComplexPoint& z) { return f.evaluate(z); };
    }

    std::function<Complex(const ComplexPoint&)> symmetric_evaluator() const {
        return [f = *this](const ComplexPoint& z) { return f.evaluate_symmetric(z); };
    }

    /// Representation data of the closed forms (for the fixtures that have
    /// one in closed form); DataBacked functions return their own data.
    std::optional<HNData> representation() const {
        switch (kind_) {
            case Kind::DataBacked:
                return data_;
            case Kind::Affine:
                return HNData(affine_a_, affine_b_, MeasureSpec::zero(n_));
            case Kind::Constant: {
                if (const_value_.imag() == 0.0)
                    return HNData(const_value_.real(), std::vector<double>(n_, 0.0),
                                  MeasureSpec::zero(n_));
                std::vector<double> scales(n_, 1.0);
                scales[0] = const_value_.imag();
                return HNData(const_value_.real(), std::vector<double>(n_, 0.0),
                              MeasureSpec::scaled_lebesgue(scales));
            }
            case Kind::InverseSum:
                return HNData(0.0, {0.0, 0.0},
                              MeasureSpec::curve_pushforward(antidiagonal_curve(),
                                                             2.0 * std::acos(0.0)));
            case Kind::DiracPoisson: {
                const double pi = 2.0 * std::acos(0.0);
                return HNData(0.0, {0.0, 0.0}, MeasureSpec::atoms(2, {{{0.0, 0.0}, pi * pi}}));
            }
        }
        return std::nullopt;
    }

  private:
    HNFunction(Kind kind, std::size_t n) : kind_(kind), n_(n) {
        if (n == 0) throw ValidationError("HNFunction: dimension must be >= 1");
    }

    Complex eval_impl(const ComplexPoint& z) const {
        if (z.dim() != n_) throw ValidationError("HNFunction: point dimension mismatch");
        switch (kind_) {
            case Kind::Constant: {
                // Symmetric extension of the constant's representing measure:
                // the integral term flips sign as soon as one coordinate
                // leaves the upper half-plane.
                if (z.in_upper() || const_value_.imag() == 0.0) return const_value_;
                return std::conj(const_value_);
            }
            case Kind::Affine: {
                Complex v{affine_a_, 0.0};
                for (std::size_t l = 0; l < n_; ++l) v += affine_b_[l] * z[l];
                return v;
            }
            case Kind::InverseSum: {
                const bool up1 = z[0].imag() > 0.0;
                const bool up2 = z[1].imag() > 0.0;
                if (up1 && up2) return -1.0 / (z[0] + z[1]);
                if (!up1 && up2) return 1.0 / (kImagUnit - z[0]);
                if (up1 && !up2) return 1.0 / (kImagUnit - z[1]);
                return 1.0 / (z[0] + z[1]) + 1.0 / (kImagUnit - z[0]) +
                       1.0 / (kImagUnit - z[1]);
            }
            case Kind::DiracPoisson: {
                const double origin[2] = {0.0, 0.0};
                return kernel_Kn(z, origin);
            }
            case Kind::DataBacked: {
                const auto& data = *data_;
                Complex v{data.a, 0.0};
                for (std::size_t l = 0; l < n_; ++l) v += data.b[l] * z[l];
                std::vector<std::vector<double>> hints(n_);
                for (std::size_t j = 0; j < n_; ++j) hints[j] = {z[j].real()};
                auto integrand = [&z](std::span<const double> t) { return kernel_Kn(z, t); };
                const double pi = 2.0 * std::acos(0.0);
                const Complex integral = integrate_measure(data.measure, integrand, cfg_, hints);
                return v + integral / std::pow(pi, static_cast<double>(n_));
            }
        }
        throw ValidationError("HNFunction: unknown kind");
    }

    Kind kind_;
    std::size_t n_;
    std::optional<HNData> data_;
    QuadratureConfig cfg_;
    Complex const_value_{0.0, 0.0};
    double affine_a_ = 0.0;
    std::vector<double> affine_b_;
};

struct BLimitResult {
    double estimate = 0.0;            // limit of q(z)/z_l along the ray
    std::vector<Complex> ratios;      // raw q(z)/z_l per radius
    std::vector<Complex> extrapolated;
    double last_delta = 0.0;
    bool converged = false;
};

/// Estimates b_l = lim q(z)/z_l along the ray z_l = R e^{i angle} inside a
/// Stoltz domain, with the other coordinates frozen at `base`. A first-order
/// Richardson step in 1/R removes the a/z_l contribution, which dominates the
/// raw ratio.
inline BLimitResult b_limit_estimate(const std::function<Complex(const ComplexPoint&)>& q,
                                     const ComplexPoint& base, std::size_t ell,
                                     double stoltz_angle = std::acos(0.0),
                                     std::span<const double> radii = {}, double tol = 1e-6) {
    const double half_pi = std::acos(0.0);
    if (!(stoltz_angle > 0.0) || stoltz_angle > half_pi + 1e-15)
        throw ValidationError("b_limit_estimate: Stoltz angle must lie in (0, pi/2]");
    if (ell >= base.dim()) throw ValidationError("b_limit_estimate: coordinate index out of range");

    static const double kDefaultRadii[] = {1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
    if (radii.empty()) radii = kDefaultRadii;

    BLimitResult out;
    ComplexPoint z = base;
    const Complex direction{std::cos(stoltz_angle), std::sin(stoltz_angle)};
    for (double r : radii) {
        z[ell] = r * direction;
        out.ratios.push_back(q(z) / z[ell]);
    }
    out.extrapolated.push_back(out.ratios.front());
    for (std::size_t k = 1; k < out.ratios.size(); ++k) {
        const double rk = radii[k], rp = radii[k - 1];
        out.extrapolated.push_back((rk * out.ratios[k] - rp * out.ratios[k - 1]) / (rk - rp));
    }
    const std::size_t last = out.extrapolated.size() - 1;
    if (last == 0) throw ValidationError("b_limit_estimate: need at least two radii");
    out.last_delta = std::abs(out.extrapolated[last] - out.extrapolated[last - 1]);
    out.converged = out.last_delta < tol * (1.0 + std::abs(out.extrapolated[last]));
    if (!out.converged)
        throw NonConvergentError("b_limit_estimate: ratio sequence did not stabilize");
    out.estimate = out.extrapolated[last].real();
    return out;
}

struct ImaginaryScanReport {
    double min_imag = 0.0;
    std::size_t argmin = 0;
    double tolerance = 0.0;
    bool verdict = false;
};

/// Minimum of Im q over a sample; verdict true when it stays above -tol.
inline ImaginaryScanReport imaginary_part_nonneg_scan(
    const std::function<Complex(const ComplexPoint&)>& q, std::span<const ComplexPoint> points,
    double tol = 1e-10) {
    if (points.empty()) throw ValidationError("imaginary_part_nonneg_scan: empty sample");
    ImaginaryScanReport report;
    report.tolerance = tol;
    report.min_imag = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double im = q(points[k]).imag();
        if (im < report.min_imag) {
            report.min_imag = im;
            report.argmin = k;
        }
    }
    report.verdict = report.min_imag >= -tol;
    return report;
}

}  // namespace nvk
