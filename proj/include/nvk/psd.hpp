#pragma once

// Positive semi-definiteness certification for two-point kernels.
//
// A kernel F is sampled on m points into the Gram matrix M[i][j] = F(z_i,z_j),
// Hermitian-averaged, and certified through its spectrum. Verdicts are
// sample-based: negative eigenvalues below -tol*scale count against the
// kernel, eigenvalues inside the band count as zero, where scale is
// max(1, spectral radius). The negative-squares estimator refines the sample
// size through 8, 16, 32, 64 nested points and reports the largest count seen.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nvk/complex_point.hpp"
#include "nvk/errors.hpp"
#include "nvk/jacobi_eigen.hpp"
#include "nvk/sampling.hpp"

namespace nvk {

enum class KernelDomain { UpperHalfPlane, OffReal, Polydisk };
enum class KernelProvenance { PoissonType, NevanlinnaKernel, ClosedForm, User };

/// A two-point map C^n x C^n -> C together with its declared domain.
struct KernelFunction {
    std::function<Complex(const ComplexPoint&, const ComplexPoint&)> eval;
    std::size_t dim = 0;
    KernelDomain domain = KernelDomain::UpperHalfPlane;
    KernelProvenance provenance = KernelProvenance::User;
    std::string label;

    Complex operator()(const ComplexPoint& z, const ComplexPoint& w) const { return eval(z, w); }
};

inline std::vector<ComplexPoint> sample_kernel_domain(const KernelFunction& kernel, std::size_t m,
                                                      std::uint64_t seed) {
    switch (kernel.domain) {
        case KernelDomain::UpperHalfPlane: return sample_upper_points(kernel.dim, m, seed);
        case KernelDomain::OffReal: return sample_offreal_points(kernel.dim, m, seed);
        case KernelDomain::Polydisk: return sample_disk_points(kernel.dim, m, seed);
    }
    throw ValidationError("sample_kernel_domain: unknown domain");
}

struct GramAssembly {
    HermitianMatrix matrix;
    double max_asymmetry = 0.0;  // max |F(z_i,z_j) - conj(F(z_j,z_i))|
    double scale_bound = 0.0;    // max(1, infinity norm), an upper spectral-radius bound
};

/// Samples the kernel into a Hermitian-averaged Gram matrix. A kernel whose
/// asymmetry exceeds 1e-8 * scale cannot be positive semi-definite and is
/// rejected outright.
inline GramAssembly gram_matrix(const KernelFunction& kernel,
                                std::span<const ComplexPoint> points) {
    const std::size_t m = points.size();
    if (m == 0) throw ValidationError("gram_matrix: need at least one point");
    std::vector<Complex> raw(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) raw[i * m + j] = kernel(points[i], points[j]);

    double asym = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            asym = std::max(asym, std::abs(raw[i * m + j] - std::conj(raw[j * m + i])));

    double inf_norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += std::abs(raw[i * m + j]);
        inf_norm = std::max(inf_norm, row);
    }
    const double scale = std::max(1.0, inf_norm);
    if (asym > 1e-8 * scale)
        throw HermitianViolationError("gram_matrix: kernel is not Hermitian-symmetric on sample");

    return {HermitianMatrix::from_entries(m, raw), asym, scale};
}

struct GramReport {
    std::size_t m = 0;
    std::vector<double> eigenvalues;  // nondecreasing
    double min_eigenvalue = 0.0;
    std::size_t negative_count = 0;  // eigenvalues < -tol*scale
    std::size_t zero_count = 0;      // |eigenvalue| <= tol*scale
    double tolerance = 0.0;
    double scale = 0.0;  // max(1, spectral radius)
    double max_asymmetry = 0.0;
    bool verdict_psd = false;
};

inline GramReport psd_check(const KernelFunction& kernel, std::span<const ComplexPoint> points,
                            double tol = 1e-10) {
    const GramAssembly assembly = gram_matrix(kernel, points);
    GramReport report;
    report.m = points.size();
    report.eigenvalues = hermitian_eigenvalues(assembly.matrix);
    report.max_asymmetry = assembly.max_asymmetry;
    report.tolerance = tol;
    report.min_eigenvalue = report.eigenvalues.front();

    double radius = 0.0;
    for (double v : report.eigenvalues) radius = std::max(radius, std::abs(v));
    report.scale = std::max(1.0, radius);

    const double band = tol * report.scale;
    for (double v : report.eigenvalues) {
        if (v < -band)
            ++report.negative_count;
        else if (std::abs(v) <= band)
            ++report.zero_count;
    }
    report.verdict_psd = report.negative_count == 0;
    return report;
}

/// The sampled quadratic form sum_{i,j} F(z_i, z_j) c_i conj(c_j).
inline Complex quadratic_form(const KernelFunction& kernel, std::span<const ComplexPoint> points,
                              std::span<const Complex> coefficients) {
    if (points.size() != coefficients.size())
        throw ValidationError("quadratic_form: coefficient count must match point count");
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            sum += kernel(points[i], points[j]) * coefficients[i] * std::conj(coefficients[j]);
    return sum;
}

struct NegativeSquaresReport {
    std::size_t kappa_hat = 0;
    std::vector<std::size_t> sample_sizes;
    std::vector<std::vector<std::size_t>> counts;  // counts[trial][size index]
    bool plateaued = false;
};

/// Lower-bound estimate of the number of negative squares: the largest
/// negative eigenvalue count over nested samples of 8, 16, 32, 64 points and
/// over independent trials. Counts are monotone in the sample by eigenvalue
/// interlacing, so a count still growing at the largest size means the
/// estimate has not stabilized.
inline NegativeSquaresReport negative_squares_estimate(const KernelFunction& kernel,
                                                       std::uint64_t seed, std::size_t trials = 3,
                                                       double tol = 1e-10) {
    if (trials < 1) throw ValidationError("negative_squares_estimate: trials must be >= 1");
    NegativeSquaresReport report;
    report.sample_sizes = {8, 16, 32, 64};
    report.plateaued = true;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto points = sample_kernel_domain(kernel, report.sample_sizes.back(),
                                                 seed + 1000 * trial);
        std::vector<std::size_t> row;
        for (std::size_t m : report.sample_sizes) {
            const auto sub = std::span<const ComplexPoint>(points.data(), m);
            row.push_back(psd_check(kernel, sub, tol).negative_count);
        }
        if (row[row.size() - 1] > row[row.size() - 2]) report.plateaued = false;
        report.kappa_hat = std::max(report.kappa_hat, row.back());
        report.counts.push_back(std::move(row));
    }
    if (!report.plateaued)
        throw UnstableEstimateError(
            "negative_squares_estimate: count still increasing at the largest sample");
    return report;
}

struct ClosureReport {
    GramReport sum;
    GramReport product;
    bool both_psd = false;
};

/// Checks that F1 + F2 and F1 * F2 stay positive semi-definite on the sample.
inline ClosureReport product_sum_closure_check(const KernelFunction& f1, const KernelFunction& f2,
                                               std::span<const ComplexPoint> points,
                                               double tol = 1e-10) {
    if (f1.dim != f2.dim)
        throw ValidationError("product_sum_closure_check: kernel dimensions differ");
    KernelFunction sum{[&f1, &f2](const ComplexPoint& z, const ComplexPoint& w) {
                           return f1(z, w) + f2(z, w);
                       },
                       f1.dim, f1.domain, KernelProvenance::ClosedForm, "sum"};
    KernelFunction product{[&f1, &f2](const ComplexPoint& z, const ComplexPoint& w) {
                               return f1(z, w) * f2(z, w);
                           },
                           f1.dim, f1.domain, KernelProvenance::ClosedForm, "product"};
    ClosureReport report;
    report.sum = psd_check(sum, points, tol);
    report.product = psd_check(product, points, tol);
    report.both_psd = report.sum.verdict_psd && report.product.verdict_psd;
    return report;
}

}  // namespace nvk
