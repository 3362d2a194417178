#pragma once

#include "alphacomp/types.hpp"

namespace alphacomp {

/// Induced matrix norm: max column absolute sum (p=1), largest singular
/// value (p=2), max row absolute sum (p=inf).
double induced_norm(const Matrix& A, MeasureNorm p);

/// Matrix measure (logarithmic norm) of a square matrix:
///   mu_1   : max_j Re(a_jj) + sum_{i != j} |a_ij|
///   mu_2   : lambda_max((A + A*)/2)
///   mu_inf : max_i Re(a_ii) + sum_{j != i} |a_ij|
double matrix_measure(const Matrix& A, MeasureNorm p);

/// mu_p(A^[k]) evaluated from the entries of A without forming the compound:
/// tuple sweeps for p in {1, inf}, sum of the k largest eigenvalues of the
/// Hermitian part for p = 2.
double compound_measure(const Matrix& A, int k, MeasureNorm p);

/// mu_p(A^[alpha]) = (1-s) mu_p(A^[k]) + s mu_p(A^[k+1]).
double alpha_measure(const Matrix& A, const AlphaIndex& alpha, MeasureNorm p);

/// The sequence mu_p(A^[1]), ..., mu_p(A^[n]).
std::vector<double> measure_chain(const Matrix& A, MeasureNorm p);

/// Measure in the weighted norm |x|_{p,P} = |P x|_p, i.e. mu_p(P A P^{-1});
/// the only route to measures beyond the three closed-form norms.
double weighted_measure(const Matrix& A, const Matrix& P, MeasureNorm p);

}  // namespace alphacomp
