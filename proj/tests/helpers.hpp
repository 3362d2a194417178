#pragma once

#include "alphacomp/matrix_functions.hpp"
#include "alphacomp/types.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

using alphacomp::Complex;
using alphacomp::Matrix;
using alphacomp::RealMatrix;
using alphacomp::RealVector;
using alphacomp::Vector;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline RealMatrix random_real(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = gauss(rng);
    return M;
}

inline Matrix random_complex(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix M(rows, cols);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            M(i, j) = Complex(gauss(rng) * scale, gauss(rng) * scale);
    return M;
}

// Real matrix exp(B) with ||B||_F <= radius: the spectrum lies in a sector
// where every tuple of eigenvalue arguments (up to size n) sums inside
// (-pi, pi), so principal-branch power identities hold exactly.
inline RealMatrix random_branch_safe_real(std::mt19937_64& rng, int n,
                                          double radius = 0.7) {
    RealMatrix B = random_real(rng, n, n);
    B *= radius / B.norm();
    return alphacomp::matrix_exp(B.cast<Complex>()).real();
}

// Redraws until the eigenvector basis is well conditioned and the matrix is
// comfortably non-singular.
inline RealMatrix random_well_conditioned_real(std::mt19937_64& rng, int n,
                                               double cond_limit = 1e6) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        RealMatrix A = random_real(rng, n, n);
        const auto dec = alphacomp::eig(A.cast<Complex>());
        double min_abs = 1e300;
        for (Eigen::Index i = 0; i < dec.values.size(); ++i)
            min_abs = std::min(min_abs, std::abs(dec.values(i)));
        if (dec.condition_estimate < cond_limit && min_abs > 1e-2) return A;
    }
    throw std::runtime_error("failed to draw a well-conditioned matrix");
}

inline double max_abs_diff(const Matrix& A, const Matrix& B) {
    return (A - B).cwiseAbs().maxCoeff();
}

// greedy nearest-neighbour matching; robust against ties in any sort order
inline bool multiset_close(const std::vector<Complex>& a,
                           std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Complex& value : a) {
        std::size_t best = b.size();
        double best_dist = tol;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double dist = std::abs(value - b[j]);
            if (dist <= best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == b.size()) return false;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return true;
}

inline std::vector<Complex> to_vector(const Vector& v) {
    return std::vector<Complex>(v.data(), v.data() + v.size());
}

inline Matrix cdiag(const std::vector<Complex>& d) {
    Matrix M = Matrix::Zero(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
    return M;
}

inline RealVector make_point(std::initializer_list<double> values) {
    RealVector x(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) x(i++) = v;
    return x;
}

}  // namespace testutil
