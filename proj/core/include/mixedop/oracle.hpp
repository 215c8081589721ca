#pragma once

#include "mixedop/dense.hpp"
#include "mixedop/operator.hpp"

namespace mixedop {

/// Hard ceiling for the brute-force matrix dimension M * p^N. Defaults to
/// 512; the environment variable MIXEDOP_MAX_ORACLE_DIM (a positive integer)
/// overrides it.
int oracle_dim_cap();

/// The operator's action on the invariant staircase subspace as a plain
/// D x D matrix, D = M * p^N. Row t*M+i pairs the flat full-grid cell t with
/// the vector component i:
///   F[(t,i),(t',j)] = sum_alpha [t' matches t outside alpha]
///                       h^|alpha| A_alpha[t, t'_alpha][i,j].
/// Throws SizeCapExceeded when D tops the cap.
ComplexMatrix full_matrix(const MixedOperator& a);

/// Flatten u to the column vector the full matrix acts on (entry t*M+i).
ComplexMatrix function_as_column(const StaircaseFunction& u);
StaircaseFunction column_as_function(const ComplexMatrix& col, int N, int M, int p);

/// Scalar determinant of the full matrix; equals the product of every
/// determinant component over its cells.
Complex oracle_det(const MixedOperator& a);

/// Eigenvalues of the full matrix (unordered).
std::vector<Complex> oracle_eigenvalues(const MixedOperator& a);

/// Dense inverse of the full matrix; SingularMatrix when not invertible.
ComplexMatrix oracle_inverse(const MixedOperator& a);

} // namespace mixedop
