#include "alphacomp/alpha_compound.hpp"

#include "alphacomp/compound.hpp"
#include "alphacomp/matrix_functions.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace alphacomp {

namespace {

void check_square(const Matrix& A, const char* what) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument(std::string(what) +
                                    " requires a square matrix");
    }
}

void check_order(const AlphaIndex& alpha, int n, const char* what) {
    if (alpha.alpha > static_cast<double>(n)) {
        throw std::invalid_argument(std::string(what) + ": alpha = " +
                                    std::to_string(alpha.alpha) +
                                    " exceeds the dimension " +
                                    std::to_string(n));
    }
}

void check_nonsingular(const Matrix& A, const char* what) {
    Eigen::JacobiSVD<Matrix> svd(A);
    const auto& sv = svd.singularValues();
    if (A.rows() == 0 || sv(sv.size() - 1) <= 1e-12 * sv(0)) {
        throw std::domain_error(std::string(what) +
                                " requires a non-singular matrix");
    }
}

// eigenvalues sorted by decreasing real part, ties by decreasing imaginary
Vector sorted_eigenvalues(const Matrix& A) {
    EigenDecomposition dec = eig(A);
    std::vector<Complex> values(dec.values.data(),
                                dec.values.data() + dec.values.size());
    std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    Vector out(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) out(i) = values[i];
    return out;
}

}  // namespace

Matrix alpha_mult_compound(const Matrix& A, const AlphaIndex& alpha) {
    check_square(A, "alpha_mult_compound");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_mult_compound");
    if (alpha.is_integer()) return mult_compound(A, alpha.k);
    check_nonsingular(A, "alpha_mult_compound");
    const Matrix left = matrix_real_power(mult_compound(A, alpha.k), 1.0 - alpha.s);
    const Matrix right = matrix_real_power(mult_compound(A, alpha.k + 1), alpha.s);
    return kron_product(left, right);
}

Matrix alpha_mult_compound_alt(const Matrix& A, const AlphaIndex& alpha) {
    check_square(A, "alpha_mult_compound_alt");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_mult_compound_alt");
    if (alpha.is_integer()) return mult_compound(A, alpha.k);
    check_nonsingular(A, "alpha_mult_compound_alt");
    const Matrix left = mult_compound(matrix_real_power(A, 1.0 - alpha.s), alpha.k);
    const Matrix right = mult_compound(matrix_real_power(A, alpha.s), alpha.k + 1);
    return kron_product(left, right);
}

Matrix alpha_add_compound(const Matrix& A, const AlphaIndex& alpha) {
    check_square(A, "alpha_add_compound");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_add_compound");
    if (alpha.is_integer()) return add_compound(A, alpha.k);
    return kron_sum((1.0 - alpha.s) * add_compound(A, alpha.k),
                    alpha.s * add_compound(A, alpha.k + 1));
}

Matrix alpha_add_compound_oracle(const Matrix& A, const AlphaIndex& alpha,
                                 double eps) {
    check_square(A, "alpha_add_compound_oracle");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_add_compound_oracle");
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("oracle step must be a positive real");
    }
    const Matrix I = Matrix::Identity(n, n);
    const Matrix plus = alpha_mult_compound(I + eps * A, alpha);
    const Matrix minus = alpha_mult_compound(I - eps * A, alpha);
    if (!plus.allFinite() || !minus.allFinite()) {
        throw std::runtime_error("oracle step degenerated; try a smaller eps");
    }
    return (plus - minus) / (2.0 * eps);
}

std::vector<Complex> alpha_eigs(const Matrix& A, const AlphaIndex& alpha,
                                CompoundKind kind) {
    check_square(A, "alpha_eigs");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_eigs");
    if (kind == CompoundKind::Multiplicative) {
        check_nonsingular(A, "alpha_eigs (multiplicative)");
    }
    const Vector values = eig(A).values;

    const auto tuple_products = [&](int order, double exponent) {
        std::vector<Complex> out;
        for (const auto& t : lex_tuples(n, order)) {
            Complex prod = 1.0;
            for (int idx : t.indices)
                prod *= principal_power(values(idx - 1), exponent);
            out.push_back(prod);
        }
        return out;
    };
    const auto tuple_sums = [&](int order) {
        std::vector<Complex> out;
        for (const auto& t : lex_tuples(n, order)) {
            Complex sum = 0.0;
            for (int idx : t.indices) sum += values(idx - 1);
            out.push_back(sum);
        }
        return out;
    };

    std::vector<Complex> spectrum;
    if (alpha.is_integer()) {
        if (kind == CompoundKind::Multiplicative) {
            spectrum = tuple_products(alpha.k, 1.0);
        } else {
            spectrum = tuple_sums(alpha.k);
        }
        return spectrum;
    }

    if (kind == CompoundKind::Multiplicative) {
        const auto left = tuple_products(alpha.k, 1.0 - alpha.s);
        const auto right = tuple_products(alpha.k + 1, alpha.s);
        for (const Complex& l : left)
            for (const Complex& r : right) spectrum.push_back(l * r);
    } else {
        const auto left = tuple_sums(alpha.k);
        const auto right = tuple_sums(alpha.k + 1);
        for (const Complex& l : left)
            for (const Complex& r : right)
                spectrum.push_back((1.0 - alpha.s) * l + alpha.s * r);
    }
    return spectrum;
}

double alpha_spectral_abscissa(const Matrix& A, const AlphaIndex& alpha) {
    check_square(A, "alpha_spectral_abscissa");
    const int n = static_cast<int>(A.rows());
    check_order(alpha, n, "alpha_spectral_abscissa");
    const Vector values = sorted_eigenvalues(A);
    double abscissa = 0.0;
    for (int i = 0; i < alpha.k; ++i) abscissa += values(i).real();
    if (alpha.s > 0.0) abscissa += alpha.s * values(alpha.k).real();
    return abscissa;
}

Matrix transform_add_compound(const Matrix& T, const Matrix& A,
                              const AlphaIndex& alpha) {
    check_square(A, "transform_add_compound");
    if (T.rows() != T.cols() || T.rows() != A.rows()) {
        throw std::invalid_argument(
            "transform_add_compound requires T square and conformable with A");
    }
    check_nonsingular(T, "transform_add_compound");
    // B = T A T^{-1}, via a right solve
    const Matrix TA = T * A;
    const Matrix B =
        T.transpose().partialPivLu().solve(TA.transpose()).transpose();
    return alpha_add_compound(B, alpha);
}

}  // namespace alphacomp
