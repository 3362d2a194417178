#pragma once

#include "alphacomp/types.hpp"

namespace alphacomp {

/// All k-element subsets of {1..n} as strictly increasing tuples, in
/// lexicographic order. Position l holds the tuple Q^{k,n}_l (1-based l).
std::vector<LexTuple> lex_tuples(int n, int k);

/// Determinant of the submatrix of A selected by `rows` and `cols`.
Complex minor(const Matrix& A, const LexTuple& rows, const LexTuple& cols);

/// k multiplicative compound: the binom(n,k) x binom(m,k) matrix of all
/// order-k minors of A in lexicographic order. A^(1) = A, and for square A,
/// A^(n) is det(A) as a 1x1 matrix.
Matrix mult_compound(const Matrix& A, int k);

/// k additive compound of a square matrix: the first-order Taylor
/// coefficient of (I + eps*A)^(k), assembled entrywise from the
/// diagonal-sum / signed-single-substitution / zero rule.
Matrix add_compound(const Matrix& A, int k);

/// Kronecker product [a_ij * B].
Matrix kron_product(const Matrix& A, const Matrix& B);

/// Kronecker sum X (x) I_m + I_n (x) Y of square matrices.
Matrix kron_sum(const Matrix& X, const Matrix& Y);

/// Wedge product of k vectors in C^n: the column of k-minors of the n x k
/// matrix whose columns are the given vectors.
Vector wedge(const std::vector<Vector>& vectors);

}  // namespace alphacomp
