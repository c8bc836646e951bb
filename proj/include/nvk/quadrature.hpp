#pragma once

// Adaptive quadrature over the real line and iterated rules over R^n.
//
// Improper integrals are compactified through t = tan(theta), which turns
//     int_R f(t) dt   into   int_{-pi/2}^{pi/2} f(tan th) (1 + tan^2 th) dth.
// Every integrand handled here is dominated by (1+t^2)^{-1}, so the mapped
// integrand stays bounded and a Gauss-Kronrod 15(7) rule with error-directed
// bisection applies without special endpoint treatment (the Kronrod nodes are
// interior, so tan is never evaluated at +-pi/2).

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"

namespace nvk {

struct QuadratureConfig {
    // Splits the compactified domain at +-atan(truncation_radius). With
    // include_tails the two endpoint panels are still integrated, so the full
    // line is covered; without it the integral is hard-truncated at the
    // radius, which is what slowly oscillating integrands need.
    double truncation_radius = 1e6;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    bool include_tails = true;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw ValidationError("QuadratureConfig: tolerances must be positive");
        if (max_subdivisions < 1)
            throw ValidationError("QuadratureConfig: max_subdivisions must be >= 1");
        if (!(truncation_radius > 0.0))
            throw ValidationError("QuadratureConfig: truncation_radius must be positive");
    }
};

struct QuadratureOutcome {
    Complex value;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

namespace detail {

// Nodes and weights of the 15-point Kronrod rule with embedded 7-point Gauss
// rule on [-1,1] (positive half; the rule is symmetric).
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kGk15KronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGk15GaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    Complex value;
    double error;
};

template <typename F>
PanelEstimate gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const Complex fc = f(center);
    Complex resk = kGk15KronrodW[7] * fc;
    Complex resg = kGk15GaussW[3] * fc;
    double resabs = kGk15KronrodW[7] * std::abs(fc);

    std::array<Complex, 7> fsum{};
    std::array<Complex, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kGk15Nodes[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        fsum[j] = f1[j] + f2[j];
        resk += kGk15KronrodW[j] * fsum[j];
        resabs += kGk15KronrodW[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    }
    resg += kGk15GaussW[0] * fsum[1] + kGk15GaussW[1] * fsum[3] + kGk15GaussW[2] * fsum[5];

    const Complex mean = resk * 0.5;
    double resasc = kGk15KronrodW[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kGk15KronrodW[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    double err = std::abs(resk - resg) * half;
    resabs *= half;
    resasc *= half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    return {resk * half, err};
}

struct Segment {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

// Error-directed bisection over a fixed list of initial panels.
template <typename F>
QuadratureOutcome adapt(F&& f, std::span<const double> bounds, const QuadratureConfig& cfg) {
    std::priority_queue<Segment> active;
    Complex total{0.0, 0.0};
    double total_error = 0.0;
    double frozen_error = 0.0;  // panels too narrow to split further

    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        if (!(bounds[k] < bounds[k + 1])) continue;
        const auto est = gk15(f, bounds[k], bounds[k + 1]);
        active.push({bounds[k], bounds[k + 1], est.value, est.error});
        total += est.value;
        total_error += est.error;
    }

    int splits = 0;
    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_error + frozen_error <= target) break;
        if (active.empty()) {
            if (frozen_error <= target) break;
            throw NonConvergentError("integrate_1d: panels exhausted before reaching tolerance");
        }
        Segment worst = active.top();
        active.pop();
        const double width = worst.b - worst.a;
        if (width < 64.0 * std::numeric_limits<double>::epsilon()) {
            total_error -= worst.error;
            frozen_error += worst.error;
            continue;
        }
        if (++splits > cfg.max_subdivisions)
            throw NonConvergentError("integrate_1d: subdivision budget exhausted");
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = gk15(f, worst.a, mid);
        const auto right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push({worst.a, mid, left.value, left.error});
        active.push({mid, worst.b, right.value, right.error});
    }
    return {total, total_error + frozen_error, splits};
}

}  // namespace detail

/// Integrates f over the whole real line (tan-compactified, adaptive GK15).
/// `breakpoints` are t-coordinates where panels should start: pole shadows,
/// peaks and kinks listed here are resolved instead of being skipped over by
/// a coarse first pass.
inline QuadratureOutcome integrate_1d_outcome(const std::function<Complex(double)>& f,
                                              const QuadratureConfig& cfg,
                                              std::span<const double> breakpoints = {}) {
    cfg.validate();
    const double half_pi = std::acos(0.0) * 1.0;  // pi/2 to full precision
    const double theta_cut = std::atan(cfg.truncation_radius);

    std::vector<double> bounds;
    bounds.reserve(breakpoints.size() + 6);
    if (cfg.include_tails) bounds.push_back(-half_pi);
    bounds.push_back(-theta_cut);
    bounds.push_back(0.0);
    for (double t : breakpoints) {
        if (std::isfinite(t)) bounds.push_back(std::atan(t));
    }
    bounds.push_back(theta_cut);
    if (cfg.include_tails) bounds.push_back(half_pi);

    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end(),
                             [](double x, double y) { return std::abs(x - y) < 1e-13; }),
                 bounds.end());

    auto mapped = [&f](double theta) {
        const double t = std::tan(theta);
        return f(t) * (1.0 + t * t);
    };
    return detail::adapt(mapped, bounds, cfg);
}

inline Complex integrate_1d(const std::function<Complex(double)>& f, const QuadratureConfig& cfg,
                            std::span<const double> breakpoints = {}) {
    return integrate_1d_outcome(f, cfg, breakpoints).value;
}

/// Breakpoints for dimension `dim` given the already-fixed outer coordinates
/// (dimensions 0..dim-1). Lets callers steer the inner rules of an iterated
/// integral toward features whose location depends on the outer variable.
using BreakpointProvider =
    std::function<std::vector<double>(std::size_t dim, std::span<const double> outer)>;

/// Iterated integration of f over R^n (dimension 0 outermost).
inline Complex integrate_over_rn(std::size_t n,
                                 const std::function<Complex(std::span<const double>)>& f,
                                 const QuadratureConfig& cfg,
                                 const BreakpointProvider& breakpoints = {}) {
    if (n == 0) throw ValidationError("integrate_over_rn: dimension must be >= 1");
    std::vector<double> coords(n);
    std::function<Complex(std::size_t)> level = [&](std::size_t dim) -> Complex {
        std::vector<double> cuts;
        if (breakpoints) cuts = breakpoints(dim, std::span<const double>(coords.data(), dim));
        auto slice = [&](double t) -> Complex {
            coords[dim] = t;
            if (dim + 1 == n) return f(coords);
            return level(dim + 1);
        };
        return integrate_1d(slice, cfg, cuts);
    };
    return level(0);
}

/// Trapezoid rule over one period of [0, 2pi); spectrally accurate for
/// integrands analytic in a strip around the circle.
inline Complex trapezoid_periodic(const std::function<Complex(double)>& f, int nodes) {
    if (nodes < 1) throw ValidationError("trapezoid_periodic: need at least one node");
    const double two_pi = 4.0 * std::acos(0.0);
    const double h = two_pi / nodes;
    Complex sum{0.0, 0.0};
    for (int k = 0; k < nodes; ++k) sum += f(h * k);
    return sum * h;
}

}  // namespace nvk
