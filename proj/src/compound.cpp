#include "alphacomp/compound.hpp"

#include <Eigen/LU>

#include <algorithm>

namespace alphacomp {

namespace {

void check_tuple(const LexTuple& t, int limit, const char* what) {
    int prev = 0;
    for (int idx : t.indices) {
        if (idx <= prev || idx > limit) {
            throw std::invalid_argument(
                std::string(what) +
                " must be strictly increasing 1-based indices within range");
        }
        prev = idx;
    }
}

}  // namespace

std::vector<LexTuple> lex_tuples(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("lex_tuples requires 1 <= k <= n, got k = " +
                                    std::to_string(k) + ", n = " +
                                    std::to_string(n));
    }
    std::vector<LexTuple> tuples;
    tuples.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = i + 1;
    while (true) {
        tuples.push_back(LexTuple{current, n});
        // advance to the next strictly increasing tuple
        int pos = k - 1;
        while (pos >= 0 && current[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int i = pos + 1; i < k; ++i) current[i] = current[i - 1] + 1;
    }
    return tuples;
}

Complex minor(const Matrix& A, const LexTuple& rows, const LexTuple& cols) {
    if (rows.size() != cols.size()) {
        throw std::invalid_argument("minor requires equally sized index tuples");
    }
    check_tuple(rows, static_cast<int>(A.rows()), "row tuple");
    check_tuple(cols, static_cast<int>(A.cols()), "column tuple");
    const int k = rows.size();
    if (k == 1) return A(rows.indices[0] - 1, cols.indices[0] - 1);
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub(i, j) = A(rows.indices[i] - 1, cols.indices[j] - 1);
    return Eigen::PartialPivLU<Matrix>(sub).determinant();
}

Matrix mult_compound(const Matrix& A, int k) {
    require_finite(A, "mult_compound input");
    const int n = static_cast<int>(A.rows());
    const int m = static_cast<int>(A.cols());
    if (k < 1 || k > std::min(n, m)) {
        throw std::invalid_argument(
            "mult_compound requires 1 <= k <= min(rows, cols)");
    }
    if (k == 1) return A;
    const auto row_tuples = lex_tuples(n, k);
    const auto col_tuples = lex_tuples(m, k);
    Matrix out(row_tuples.size(), col_tuples.size());
    for (std::size_t i = 0; i < row_tuples.size(); ++i)
        for (std::size_t j = 0; j < col_tuples.size(); ++j)
            out(i, j) = minor(A, row_tuples[i], col_tuples[j]);
    return out;
}

Matrix add_compound(const Matrix& A, int k) {
    require_finite(A, "add_compound input");
    const int n = static_cast<int>(A.rows());
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("add_compound requires a square matrix");
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument("add_compound requires 1 <= k <= n");
    }
    if (k == 1) return A;
    const auto tuples = lex_tuples(n, k);
    const std::size_t N = tuples.size();
    Matrix out = Matrix::Zero(N, N);
    for (std::size_t r = 0; r < N; ++r) {
        const auto& a = tuples[r].indices;
        for (std::size_t c = 0; c < N; ++c) {
            const auto& b = tuples[c].indices;
            if (r == c) {
                Complex sum = 0.0;
                for (int idx : a) sum += A(idx - 1, idx - 1);
                out(r, c) = sum;
                continue;
            }
            // entry is nonzero only when the tuples differ in a single index
            int l = -1, m = -1, mismatches = 0;
            for (int idx = 0; idx < k && mismatches < 2; ++idx) {
                if (!std::binary_search(b.begin(), b.end(), a[idx])) {
                    ++mismatches;
                    l = idx;
                }
            }
            if (mismatches != 1) continue;
            for (int idx = 0; idx < k; ++idx) {
                if (!std::binary_search(a.begin(), a.end(), b[idx])) {
                    m = idx;
                    break;
                }
            }
            const double sign = ((l + m) % 2 == 0) ? 1.0 : -1.0;
            out(r, c) = sign * A(a[l] - 1, b[m] - 1);
        }
    }
    return out;
}

Matrix kron_product(const Matrix& A, const Matrix& B) {
    require_finite(A, "kron_product first argument");
    require_finite(B, "kron_product second argument");
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) =
                A(i, j) * B;
    return out;
}

Matrix kron_sum(const Matrix& X, const Matrix& Y) {
    if (X.rows() != X.cols() || Y.rows() != Y.cols()) {
        throw std::invalid_argument("kron_sum requires square matrices");
    }
    const Eigen::Index n = X.rows(), m = Y.rows();
    return kron_product(X, Matrix::Identity(m, m)) +
           kron_product(Matrix::Identity(n, n), Y);
}

Vector wedge(const std::vector<Vector>& vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("wedge requires at least one vector");
    }
    const Eigen::Index n = vectors.front().size();
    const int k = static_cast<int>(vectors.size());
    if (k > n) {
        throw std::invalid_argument("wedge of more than n vectors in C^n");
    }
    Matrix stacked(n, k);
    for (int j = 0; j < k; ++j) {
        if (vectors[j].size() != n) {
            throw std::invalid_argument("wedge vectors must share one length");
        }
        stacked.col(j) = vectors[j];
    }
    return mult_compound(stacked, k).col(0);
}

}  // namespace alphacomp
