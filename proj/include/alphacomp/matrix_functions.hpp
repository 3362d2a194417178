#pragma once

#include "alphacomp/types.hpp"

namespace alphacomp {

struct EigenDecomposition {
    Vector values;          // eigenvalues, solver order
    Matrix right_vectors;   // columns are right eigenvectors
    double condition_estimate = 0.0;  // 2-norm condition of the eigenvector matrix
};

/// Dense eigendecomposition of a square complex matrix.
EigenDecomposition eig(const Matrix& A);

/// Principal power |z|^alpha * exp(i*alpha*theta(z)) with theta in (-pi, pi].
/// z = 0 maps to 0 for alpha > 0 and throws std::domain_error otherwise.
Complex principal_power(Complex z, double alpha);

struct RealPowerResult {
    Matrix value;
    bool perturbed = false;  // eigenvector basis was ill-conditioned; a tiny
                             // seeded diagonal perturbation was applied first
};

/// A^alpha for non-singular A through the eigendecomposition, with principal
/// powers on the spectrum. Matrices whose eigenvector basis is too
/// ill-conditioned (estimate > 1e8) are nudged by a deterministic diagonal
/// perturbation of magnitude 1e-9 * ||A|| and flagged.
///
/// When A is real and its spectrum stays clear of the closed negative real
/// axis, the result is real; residual imaginary parts below
/// 1e-9 * (1 + |entry|) are truncated in that case.
RealPowerResult matrix_real_power_ex(const Matrix& A, double alpha);

/// Convenience wrapper discarding the perturbation flag.
Matrix matrix_real_power(const Matrix& A, double alpha);

/// exp(A*t). Exact per entry for diagonal A.
Matrix matrix_exp(const Matrix& A, double t = 1.0);

}  // namespace alphacomp
