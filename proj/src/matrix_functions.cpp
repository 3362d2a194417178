#include "alphacomp/matrix_functions.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>

namespace alphacomp {

namespace {

constexpr double kEigCondLimit = 1e8;
constexpr double kSingularTol = 1e-12;
constexpr double kPerturbScale = 1e-9;
constexpr double kRealTruncTol = 1e-9;
constexpr double kCutTol = 1e-12;

double condition_of(const Matrix& V) {
    Eigen::JacobiSVD<Matrix> svd(V);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

bool spectrum_clear_of_cut(const Vector& values) {
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const Complex z = values(i);
        const double dist =
            z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
        if (dist <= kCutTol * (1.0 + std::abs(z))) return false;
    }
    return true;
}

void truncate_imag(Matrix& M) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            Complex& z = M(i, j);
            if (std::abs(z.imag()) <= kRealTruncTol * (1.0 + std::abs(z))) {
                z = Complex(z.real(), 0.0);
            }
        }
    }
}

}  // namespace

EigenDecomposition eig(const Matrix& A) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("eig requires a square matrix");
    }
    require_finite(A, "eig input");
    Eigen::ComplexEigenSolver<Matrix> solver(A, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed to converge (n = " +
                                 std::to_string(A.rows()) + ")");
    }
    EigenDecomposition dec;
    dec.values = solver.eigenvalues();
    dec.right_vectors = solver.eigenvectors();
    dec.condition_estimate = condition_of(dec.right_vectors);
    return dec;
}

Complex principal_power(Complex z, double alpha) {
    if (z == Complex(0.0, 0.0)) {
        if (alpha > 0.0) return Complex(0.0, 0.0);
        throw std::domain_error("0 raised to a non-positive power");
    }
    double theta = std::arg(z);
    if (theta <= -std::numbers::pi) theta = std::numbers::pi;  // arg in (-pi, pi]
    const double modulus = std::pow(std::abs(z), alpha);
    return std::polar(modulus, alpha * theta);
}

RealPowerResult matrix_real_power_ex(const Matrix& A, double alpha) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("matrix power requires a square matrix");
    }
    require_finite(A, "matrix power input");
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("matrix power exponent must be finite");
    }
    const Eigen::Index n = A.rows();

    Eigen::JacobiSVD<Matrix> svd(A);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(n - 1);
    if (n == 0 || smin <= kSingularTol * smax) {
        throw std::domain_error(
            "matrix power of a (numerically) singular matrix");
    }

    RealPowerResult result;
    if (alpha == 0.0) {
        result.value = Matrix::Identity(n, n);
        return result;
    }
    if (alpha == 1.0) {
        result.value = A;
        return result;
    }

    const bool input_real = is_effectively_real(A);
    Matrix work = A;
    EigenDecomposition dec = eig(work);

    if (dec.condition_estimate > kEigCondLimit) {
        // Nudge toward the diagonalizable dense subset with a reproducible
        // diagonal perturbation, growing it if a draw is still degenerate.
        // The index-staggered offsets keep pairwise gaps at least
        // magnitude / (2n), so repeated eigenvalues separate reliably.
        std::mt19937_64 rng(0x414c5043u);  // fixed seed: deterministic fallback
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        double magnitude = kPerturbScale * smax;
        for (int attempt = 0; attempt < 6; ++attempt, magnitude *= 16.0) {
            work = A;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double offset =
                    magnitude * (static_cast<double>(i + 1) +
                                 0.25 * unit(rng)) /
                    static_cast<double>(n);
                work(i, i) += Complex(
                    offset, input_real ? 0.0 : 0.25 * magnitude * unit(rng));
            }
            dec = eig(work);
            if (dec.condition_estimate <= kEigCondLimit) break;
        }
        if (dec.condition_estimate > kEigCondLimit) {
            throw std::runtime_error(
                "matrix power: eigenvector basis remained ill-conditioned "
                "after diagonal perturbation (estimate " +
                std::to_string(dec.condition_estimate) + ")");
        }
        result.perturbed = true;
    }

    Vector powered(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        powered(i) = principal_power(dec.values(i), alpha);
    }
    const Matrix& V = dec.right_vectors;
    const Matrix VD = V * powered.asDiagonal();
    // right-divide by V: solve X V = V D
    result.value =
        V.transpose().partialPivLu().solve(VD.transpose()).transpose();

    if (input_real && spectrum_clear_of_cut(dec.values)) {
        truncate_imag(result.value);
    }
    return result;
}

Matrix matrix_real_power(const Matrix& A, double alpha) {
    return matrix_real_power_ex(A, alpha).value;
}

Matrix matrix_exp(const Matrix& A, double t) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("matrix_exp requires a square matrix");
    }
    require_finite(A, "matrix_exp input");
    const Eigen::Index n = A.rows();
    if (A.isDiagonal(0.0)) {
        Matrix out = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) out(i, i) = std::exp(A(i, i) * t);
        return out;
    }
    return Matrix(A * t).exp();
}

}  // namespace alphacomp
