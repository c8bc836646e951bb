#pragma once

#include <stdexcept>

namespace nvk {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative scheme (quadrature, eigensolver, limit estimate) exhausted
/// its budget before reaching the requested tolerance.
struct NonConvergentError : Error { using Error::Error; };

/// An argument lies outside the domain required by the operation.
struct DomainError : Error { using Error::Error; };

/// A measure fails the growth condition: its (1+t^2)^{-1}-weighted mass diverges.
struct GrowthViolationError : Error { using Error::Error; };

/// A sampled two-point kernel is not Hermitian-symmetric within tolerance.
struct HermitianViolationError : Error { using Error::Error; };

/// A Moebius map was evaluated at its pole.
struct PoleError : Error { using Error::Error; };

/// A decomposition certificate exceeded its residual bound.
struct CertificateFailureError : Error { using Error::Error; };

/// A negative-squares count was still increasing at the largest sample size.
struct UnstableEstimateError : Error { using Error::Error; };

/// Malformed or inconsistent user input (job files, serialized objects).
struct ValidationError : Error { using Error::Error; };

}  // namespace nvk
