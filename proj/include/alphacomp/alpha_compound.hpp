#pragma once

#include "alphacomp/types.hpp"

namespace alphacomp {

enum class CompoundKind { Multiplicative, Additive };

/// alpha multiplicative compound of a non-singular square matrix:
/// (A^(k))^(1-s) (x) (A^(k+1))^s, of size binom(n,k)*binom(n,k+1).
/// Integer alpha dispatches to the standard k compound.
Matrix alpha_mult_compound(const Matrix& A, const AlphaIndex& alpha);

/// The equivalent product-of-powers form (A^(1-s))^(k) (x) (A^s)^(k+1).
/// Agrees with alpha_mult_compound whenever the spectrum is branch-compatible
/// (every tuple of eigenvalue arguments sums into (-pi, pi]).
Matrix alpha_mult_compound_alt(const Matrix& A, const AlphaIndex& alpha);

/// alpha additive compound ((1-s)A^[k]) (+) (sA^[k+1]); real for real A.
/// Integer alpha dispatches to the standard k additive compound.
Matrix alpha_add_compound(const Matrix& A, const AlphaIndex& alpha);

/// Central finite difference of eps -> (I + eps*A)^(alpha) at 0; the
/// derivative definition of the alpha additive compound, used as an
/// independent cross-check of the closed form.
Matrix alpha_add_compound_oracle(const Matrix& A, const AlphaIndex& alpha,
                                 double eps = 1e-5);

/// Spectrum of A^(alpha) or A^[alpha] assembled directly from eig(A):
/// products of principal powers, respectively interpolated sums, over all
/// (k-tuple, k+1-tuple) index pairs in Kronecker order.
std::vector<Complex> alpha_eigs(const Matrix& A, const AlphaIndex& alpha,
                                CompoundKind kind);

/// Real part of the rightmost eigenvalue of A^[alpha]:
/// sum of the k largest-real-part eigenvalues plus s times the next one.
double alpha_spectral_abscissa(const Matrix& A, const AlphaIndex& alpha);

/// (T A T^{-1})^[alpha] for non-singular T. Equals the conjugation of
/// A^[alpha] by T^(k) (x) T^(k+1).
Matrix transform_add_compound(const Matrix& T, const Matrix& A,
                              const AlphaIndex& alpha);

}  // namespace alphacomp
