#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphacomp {

using Complex = std::complex<double>;

// All matrix-valued operations carry complex entries; real-ness of inputs or
// results is a checked property, never a separate type.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Real order alpha = k + s with k integer and s in [0, 1).
struct AlphaIndex {
    double alpha = 1.0;
    int k = 1;
    double s = 0.0;

    bool is_integer() const { return s == 0.0; }

    /// Decompose alpha; requires alpha >= 1.
    static AlphaIndex of(double alpha);

    /// Decompose and additionally require alpha <= n.
    static AlphaIndex of(double alpha, int n);
};

/// Norm selector restricted to the three closed-form cases.
enum class MeasureNorm { One, Two, Inf };

MeasureNorm parse_measure_norm(const std::string& text);
std::string to_string(MeasureNorm p);

/// Strictly increasing 1-based indices drawn from {1..n}.
struct LexTuple {
    std::vector<int> indices;
    int n = 0;

    int size() const { return static_cast<int>(indices.size()); }
};

/// binom(n, k) as an exact count; throws on overflow past 64 bits.
std::int64_t binomial(int n, int k);

/// Throws std::invalid_argument when M has a NaN or Inf entry.
void require_finite(const Matrix& M, const char* what);
void require_finite(const RealMatrix& M, const char* what);

/// True when every entry's imaginary part is below tol * (1 + |entry|).
bool is_effectively_real(const Matrix& M, double tol = 1e-9);

/// Real part of M; throws std::domain_error if M fails is_effectively_real.
RealMatrix real_part_checked(const Matrix& M, double tol = 1e-9);

}  // namespace alphacomp
