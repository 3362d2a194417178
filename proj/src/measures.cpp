#include "alphacomp/measures.hpp"

#include "alphacomp/compound.hpp"

#include <Eigen/Eigenvalues>
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

// eigenvalues of the Hermitian part (A + A*)/2, descending
RealVector hermitian_part_spectrum(const Matrix& A) {
    const Matrix sym = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym,
                                                 Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolve failed");
    }
    return solver.eigenvalues().reverse();
}

}  // namespace

double induced_norm(const Matrix& A, MeasureNorm p) {
    require_finite(A, "induced_norm input");
    if (A.size() == 0) return 0.0;
    switch (p) {
        case MeasureNorm::One:
            return A.cwiseAbs().colwise().sum().maxCoeff();
        case MeasureNorm::Inf:
            return A.cwiseAbs().rowwise().sum().maxCoeff();
        case MeasureNorm::Two: {
            Eigen::JacobiSVD<Matrix> svd(A);
            return svd.singularValues()(0);
        }
    }
    throw std::logic_error("unreachable norm selector");
}

double matrix_measure(const Matrix& A, MeasureNorm p) {
    check_square(A, "matrix_measure");
    require_finite(A, "matrix_measure input");
    const Eigen::Index n = A.rows();
    if (n == 0) {
        throw std::invalid_argument("matrix_measure of an empty matrix");
    }
    switch (p) {
        case MeasureNorm::One: {
            double best = -std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                double col = A(j, j).real();
                for (Eigen::Index i = 0; i < n; ++i)
                    if (i != j) col += std::abs(A(i, j));
                best = std::max(best, col);
            }
            return best;
        }
        case MeasureNorm::Inf: {
            double best = -std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < n; ++i) {
                double row = A(i, i).real();
                for (Eigen::Index j = 0; j < n; ++j)
                    if (j != i) row += std::abs(A(i, j));
                best = std::max(best, row);
            }
            return best;
        }
        case MeasureNorm::Two:
            return hermitian_part_spectrum(A)(0);
    }
    throw std::logic_error("unreachable norm selector");
}

double compound_measure(const Matrix& A, int k, MeasureNorm p) {
    check_square(A, "compound_measure");
    require_finite(A, "compound_measure input");
    const int n = static_cast<int>(A.rows());
    if (k < 1 || k > n) {
        throw std::invalid_argument("compound_measure requires 1 <= k <= n");
    }

    if (p == MeasureNorm::Two) {
        const RealVector lambda = hermitian_part_spectrum(A);
        double sum = 0.0;
        for (int i = 0; i < k; ++i) sum += lambda(i);
        return sum;
    }

    // p in {1, inf}: sweep the k-tuples; column sums for 1, row sums for inf
    const bool columns = (p == MeasureNorm::One);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& t : lex_tuples(n, k)) {
        double value = 0.0;
        for (int idx : t.indices) value += A(idx - 1, idx - 1).real();
        for (int j = 1; j <= n; ++j) {
            if (std::binary_search(t.indices.begin(), t.indices.end(), j))
                continue;
            for (int idx : t.indices) {
                value += columns ? std::abs(A(j - 1, idx - 1))
                                 : std::abs(A(idx - 1, j - 1));
            }
        }
        best = std::max(best, value);
    }
    return best;
}

double alpha_measure(const Matrix& A, const AlphaIndex& alpha, MeasureNorm p) {
    check_square(A, "alpha_measure");
    const int n = static_cast<int>(A.rows());
    if (alpha.alpha > static_cast<double>(n)) {
        throw std::invalid_argument("alpha_measure: alpha exceeds dimension");
    }
    if (alpha.is_integer()) return compound_measure(A, alpha.k, p);
    return (1.0 - alpha.s) * compound_measure(A, alpha.k, p) +
           alpha.s * compound_measure(A, alpha.k + 1, p);
}

std::vector<double> measure_chain(const Matrix& A, MeasureNorm p) {
    check_square(A, "measure_chain");
    const int n = static_cast<int>(A.rows());
    std::vector<double> chain;
    chain.reserve(n);
    for (int k = 1; k <= n; ++k) chain.push_back(compound_measure(A, k, p));
    return chain;
}

double weighted_measure(const Matrix& A, const Matrix& P, MeasureNorm p) {
    check_square(A, "weighted_measure");
    if (P.rows() != P.cols() || P.rows() != A.rows()) {
        throw std::invalid_argument(
            "weighted_measure requires a conformable square weight");
    }
    Eigen::JacobiSVD<Matrix> svd(P);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * sv(0)) {
        throw std::domain_error("weight matrix is singular");
    }
    const Matrix PA = P * A;
    const Matrix conjugated =
        P.transpose().partialPivLu().solve(PA.transpose()).transpose();
    return matrix_measure(conjugated, p);
}

}  // namespace alphacomp
