#include "alphacomp/types.hpp"

#include <cmath>
#include <limits>

namespace alphacomp {

AlphaIndex AlphaIndex::of(double alpha) {
    if (!std::isfinite(alpha) || alpha < 1.0) {
        throw std::invalid_argument("alpha must be a finite real >= 1, got " +
                                    std::to_string(alpha));
    }
    AlphaIndex idx;
    idx.alpha = alpha;
    idx.k = static_cast<int>(std::floor(alpha));
    idx.s = alpha - idx.k;
    return idx;
}

AlphaIndex AlphaIndex::of(double alpha, int n) {
    AlphaIndex idx = of(alpha);
    if (alpha > static_cast<double>(n)) {
        throw std::invalid_argument("alpha = " + std::to_string(alpha) +
                                    " exceeds the matrix dimension " +
                                    std::to_string(n));
    }
    return idx;
}

MeasureNorm parse_measure_norm(const std::string& text) {
    if (text == "1") return MeasureNorm::One;
    if (text == "2") return MeasureNorm::Two;
    if (text == "inf" || text == "Inf" || text == "INF")
        return MeasureNorm::Inf;
    throw std::invalid_argument("norm selector must be one of 1, 2, inf; got '" +
                                text + "'");
}

std::string to_string(MeasureNorm p) {
    switch (p) {
        case MeasureNorm::One: return "1";
        case MeasureNorm::Two: return "2";
        case MeasureNorm::Inf: return "inf";
    }
    return "?";
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // multiply-then-divide stays integral: numerator is i consecutive terms
        if (result > std::numeric_limits<std::int64_t>::max() / (n - k + i)) {
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") overflows");
        }
        result = result * (n - k + i) / i;
    }
    return result;
}

void require_finite(const Matrix& M, const char* what) {
    if (!M.allFinite()) {
        throw std::invalid_argument(std::string(what) +
                                    " has a non-finite entry");
    }
}

void require_finite(const RealMatrix& M, const char* what) {
    if (!M.allFinite()) {
        throw std::invalid_argument(std::string(what) +
                                    " has a non-finite entry");
    }
}

bool is_effectively_real(const Matrix& M, double tol) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            const Complex& z = M(i, j);
            if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) return false;
        }
    }
    return true;
}

RealMatrix real_part_checked(const Matrix& M, double tol) {
    if (!is_effectively_real(M, tol)) {
        throw std::domain_error(
            "matrix has significant imaginary parts; no real form");
    }
    return M.real();
}

}  // namespace alphacomp
