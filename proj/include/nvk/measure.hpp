#pragma once

// Representable positive Borel measures on R^n.
//
// Four variants cover every measure exercised here: finite sums of point
// masses, products of named 1-D densities, pushforwards of 1-D Lebesgue
// measure along a curve, and coordinate-scaled Lebesgue measure. Each variant
// has an exact or 1-D-quadrature integration path, so no genuine n-D cubature
// is ever needed. Construction verifies the growth condition
//     int prod_l (1 + t_l^2)^{-1} dmu < infinity,
// which is the admission ticket for every kernel integral downstream.

#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"
#include "nvk/kernels.hpp"
#include "nvk/quadrature.hpp"

namespace nvk {

struct Atom {
    std::vector<double> location;
    double mass = 0.0;
};

/// A parametrized curve R -> R^n with enough structure to integrate along it
/// and to translate ambient-coordinate breakpoints into parameter values.
struct CurveSpec {
    std::string name;
    std::size_t dim = 0;
    std::function<void(double, std::span<double>)> map;
    // Parameter values t with curve_j(t) = x; used to seed quadrature panels.
    std::function<std::vector<double>(std::size_t j, double x)> preimages;
};

inline CurveSpec antidiagonal_curve() {
    CurveSpec c;
    c.name = "antidiagonal";
    c.dim = 2;
    c.map = [](double t, std::span<double> out) {
        out[0] = t;
        out[1] = -t;
    };
    c.preimages = [](std::size_t j, double x) { return std::vector<double>{j == 0 ? x : -x}; };
    return c;
}

inline const CurveSpec* find_builtin_curve(const std::string& name) {
    static const CurveSpec antidiagonal = antidiagonal_curve();
    if (name == "antidiagonal") return &antidiagonal;
    return nullptr;
}

struct NamedDensity {
    std::string name;
    std::function<double(double)> f;
};

inline NamedDensity cauchy_density() {
    return {"cauchy", [](double t) { return 1.0 / (1.0 + t * t); }};
}

inline NamedDensity gaussian_density() {
    return {"gaussian", [](double t) { return std::exp(-t * t); }};
}

inline const NamedDensity* find_builtin_density(const std::string& name) {
    static const NamedDensity cauchy = cauchy_density();
    static const NamedDensity gaussian = gaussian_density();
    if (name == "cauchy") return &cauchy;
    if (name == "gaussian") return &gaussian;
    return nullptr;
}

class MeasureSpec {
  public:
    struct Atoms {
        std::vector<Atom> atoms;
    };
    struct ProductDensity {
        std::vector<NamedDensity> densities;
    };
    struct CurvePushforward {
        CurveSpec curve;
        double weight = 0.0;
    };
    struct ScaledLebesgue {
        std::vector<double> scales;
    };
    using Variant = std::variant<Atoms, ProductDensity, CurvePushforward, ScaledLebesgue>;

    static MeasureSpec atoms(std::size_t dim, std::vector<Atom> list,
                             const QuadratureConfig& cfg = {}) {
        for (const auto& a : list) {
            if (a.location.size() != dim)
                throw ValidationError("MeasureSpec: atom dimension mismatch");
            if (!(a.mass >= 0.0)) throw ValidationError("MeasureSpec: atom masses must be >= 0");
        }
        return MeasureSpec(dim, Atoms{std::move(list)}, cfg);
    }

    static MeasureSpec zero(std::size_t dim) { return atoms(dim, {}); }

    static MeasureSpec product_density(std::vector<NamedDensity> densities,
                                       const QuadratureConfig& cfg = {}) {
        if (densities.empty()) throw ValidationError("MeasureSpec: need at least one density");
        const std::size_t dim = densities.size();
        return MeasureSpec(dim, ProductDensity{std::move(densities)}, cfg);
    }

    static MeasureSpec curve_pushforward(CurveSpec curve, double weight,
                                         const QuadratureConfig& cfg = {}) {
        if (!(weight >= 0.0)) throw ValidationError("MeasureSpec: curve weight must be >= 0");
        if (!curve.map || curve.dim == 0)
            throw ValidationError("MeasureSpec: curve must define a map and a dimension");
        const std::size_t dim = curve.dim;
        return MeasureSpec(dim, CurvePushforward{std::move(curve), weight}, cfg);
    }

    static MeasureSpec scaled_lebesgue(std::vector<double> scales,
                                       const QuadratureConfig& cfg = {}) {
        if (scales.empty()) throw ValidationError("MeasureSpec: need at least one scale");
        for (double s : scales)
            if (!(s >= 0.0)) throw ValidationError("MeasureSpec: scales must be >= 0");
        const std::size_t dim = scales.size();
        return MeasureSpec(dim, ScaledLebesgue{std::move(scales)}, cfg);
    }

    std::size_t dim() const { return dim_; }
    const Variant& data() const { return data_; }
    double growth_norm_cached() const { return growth_; }

    bool is_zero() const {
        if (const auto* a = std::get_if<Atoms>(&data_)) {
            for (const auto& atom : a->atoms)
                if (atom.mass > 0.0) return false;
            return true;
        }
        if (const auto* c = std::get_if<CurvePushforward>(&data_)) return c->weight == 0.0;
        if (const auto* s = std::get_if<ScaledLebesgue>(&data_)) {
            for (double v : s->scales)
                if (v == 0.0) return true;
            return false;
        }
        return false;
    }

  private:
    MeasureSpec(std::size_t dim, Variant data, const QuadratureConfig& cfg)
        : dim_(dim), data_(std::move(data)) {
        growth_ = compute_growth(cfg);
        if (!std::isfinite(growth_))
            throw GrowthViolationError("MeasureSpec: growth condition violated");
    }

    double compute_growth(const QuadratureConfig& cfg) const;

    std::size_t dim_;
    Variant data_;
    double growth_ = 0.0;
};

/// Integrates f against the measure. `hints` lists real-coordinate
/// breakpoints per ambient dimension (pole shadows of f); variants translate
/// them into their own parameter domain.
inline Complex integrate_measure(const MeasureSpec& mu,
                                 const std::function<Complex(std::span<const double>)>& f,
                                 const QuadratureConfig& cfg,
                                 const std::vector<std::vector<double>>& hints = {}) {
    const std::size_t n = mu.dim();
    return std::visit(
        [&](const auto& m) -> Complex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MeasureSpec::Atoms>) {
                Complex sum{0.0, 0.0};
                for (const auto& atom : m.atoms) sum += atom.mass * f(atom.location);
                return sum;
            } else if constexpr (std::is_same_v<T, MeasureSpec::CurvePushforward>) {
                if (m.weight == 0.0) return Complex{0.0, 0.0};
                std::vector<double> cuts;
                for (std::size_t j = 0; j < hints.size() && j < n; ++j)
                    for (double x : hints[j])
                        if (m.curve.preimages)
                            for (double t : m.curve.preimages(j, x)) cuts.push_back(t);
                std::vector<double> point(n);
                auto along = [&](double t) {
                    m.curve.map(t, point);
                    return f(point);
                };
                return m.weight * integrate_1d(along, cfg, cuts);
            } else {
                // Product densities and scaled Lebesgue: iterated quadrature
                // with the density folded into the innermost evaluation.
                double constant = 1.0;
                if constexpr (std::is_same_v<T, MeasureSpec::ScaledLebesgue>) {
                    for (double s : m.scales) constant *= s;
                    if (constant == 0.0) return Complex{0.0, 0.0};
                }
                auto weighted = [&](std::span<const double> t) -> Complex {
                    Complex v = f(t);
                    if constexpr (std::is_same_v<T, MeasureSpec::ProductDensity>) {
                        double d = 1.0;
                        for (std::size_t j = 0; j < n; ++j) d *= m.densities[j].f(t[j]);
                        v *= d;
                    }
                    return v;
                };
                BreakpointProvider bp;
                if (!hints.empty()) {
                    bp = [&hints](std::size_t dim, std::span<const double>) {
                        return dim < hints.size() ? hints[dim] : std::vector<double>{};
                    };
                }
                return constant * integrate_over_rn(n, weighted, cfg, bp);
            }
        },
        mu.data());
}

/// int prod_l (1+t_l^2)^{-1} dmu; finite for every valid measure.
inline double growth_norm(const MeasureSpec& mu, const QuadratureConfig& cfg = {}) {
    auto weight = [](std::span<const double> t) {
        double p = 1.0;
        for (double x : t) p *= 1.0 / (1.0 + x * x);
        return Complex{p, 0.0};
    };
    return integrate_measure(mu, weight, cfg).real();
}

inline double MeasureSpec::compute_growth(const QuadratureConfig& cfg) const {
    try {
        auto weight = [](std::span<const double> t) {
            double p = 1.0;
            for (double x : t) p *= 1.0 / (1.0 + x * x);
            return Complex{p, 0.0};
        };
        const std::size_t n = dim_;
        return std::visit(
            [&](const auto& m) -> double {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    double sum = 0.0;
                    for (const auto& atom : m.atoms) {
                        double p = atom.mass;
                        for (double x : atom.location) p /= (1.0 + x * x);
                        sum += p;
                    }
                    return sum;
                } else if constexpr (std::is_same_v<T, CurvePushforward>) {
                    if (m.weight == 0.0) return 0.0;
                    std::vector<double> point(n);
                    auto along = [&](double t) {
                        m.curve.map(t, point);
                        return weight(point);
                    };
                    return m.weight * integrate_1d(along, cfg).real();
                } else if constexpr (std::is_same_v<T, ProductDensity>) {
                    // The integrand factorizes, so integrate one dimension at
                    // a time instead of iterating.
                    double p = 1.0;
                    for (const auto& d : m.densities) {
                        auto g = [&d](double t) {
                            return Complex{d.f(t) / (1.0 + t * t), 0.0};
                        };
                        p *= integrate_1d(g, cfg).real();
                    }
                    return p;
                } else {
                    static_assert(std::is_same_v<T, ScaledLebesgue>);
                    const double pi = 2.0 * std::acos(0.0);
                    double p = 1.0;
                    for (double s : m.scales) p *= s * pi;
                    return p;
                }
            },
            data_);
    } catch (const NonConvergentError&) {
        throw GrowthViolationError("MeasureSpec: growth integral does not converge");
    }
}

struct NevanlinnaReport {
    std::vector<ComplexPoint> points;
    std::vector<Complex> defects;
    double max_abs_defect = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
};

/// Left-hand side of the Nevanlinna condition at a single point: the sum over
/// mixed index vectors of int prod_j N_{rho_j}(z_j, t_j) dmu. Zero for every
/// z in C^{+n} exactly when mu represents a Herglotz-Nevanlinna function. For
/// n = 1 the indexing set is empty and the defect is identically zero.
inline Complex nevanlinna_defect(const MeasureSpec& mu, const ComplexPoint& z,
                                 const QuadratureConfig& cfg = {}) {
    const std::size_t n = mu.dim();
    if (z.dim() != n) throw ValidationError("nevanlinna_defect: point dimension mismatch");
    require_upper(z, "nevanlinna_defect");
    if (n == 1) return Complex{0.0, 0.0};

    std::vector<std::vector<double>> hints(n);
    for (std::size_t j = 0; j < n; ++j) hints[j] = {z[j].real()};

    Complex sum{0.0, 0.0};
    for (const auto& rho : mixed_rho_vectors(n)) {
        auto term = [&](std::span<const double> t) {
            Complex prod{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) prod *= n_term(rho[j], z[j], t[j]);
            return prod;
        };
        sum += integrate_measure(mu, term, cfg, hints);
    }
    return sum;
}

inline NevanlinnaReport check_nevanlinna(const MeasureSpec& mu,
                                         std::span<const ComplexPoint> points, double tol,
                                         const QuadratureConfig& cfg = {}) {
    NevanlinnaReport report;
    report.tolerance = tol;
    for (const auto& z : points) {
        const Complex d = nevanlinna_defect(mu, z, cfg);
        report.points.push_back(z);
        report.defects.push_back(d);
        report.max_abs_defect = std::max(report.max_abs_defect, std::abs(d));
    }
    report.verdict = report.max_abs_defect <= tol;
    return report;
}

}  // namespace nvk
