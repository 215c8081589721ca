#pragma once

#include <utility>
#include <vector>

#include "mixedop/dense.hpp"
#include "mixedop/operator.hpp"

namespace mixedop {

/// Canonical separation of variables of one integral term: the kernel
/// splits as K[t,s] = C(t) * D(s) with C(t) of shape M x r holding the
/// blocks side by side, C(t)[i, s*M+j] = K[t,s][i,j], and D(s) the r x M
/// column selector for slot s. The rank bound is r = M * p^|alpha|.
struct SeparatedKernel {
    SubsetIndex alpha;
    int N = 0;
    int M = 1;
    int p = 1;
    int r = 1;
    std::vector<ComplexMatrix> c_mats; // one M x r matrix per full-grid cell

    ComplexMatrix d_mat(std::int64_t s) const;
};

SeparatedKernel separate_variables(const StaircaseKernel& k);

/// The finite-dimensional residue of an elementary factor. For a factor
/// I + <K>_alpha with alpha nonempty, one r x r matrix per cell of the
/// complementary dimensions:
///   E[(s,i),(s',j)] = delta + h^|alpha| K[t ovr s, s'][i,j],  r = M p^|alpha|.
/// For alpha empty the factor is a pure multiplication and the field holds
/// its M x M blocks unchanged, one per full-grid cell.
struct EMatrixField {
    SubsetIndex alpha;
    int N = 0;
    int M = 1;
    int p = 1;
    int r = 1;
    std::vector<ComplexMatrix> mats; // indexed by flat complement cell
};

/// g must be elementary for alpha: no terms outside {empty, alpha}, and for
/// nonempty alpha the empty term, when present, must be the identity.
/// Throws std::invalid_argument otherwise.
EMatrixField build_E(const MixedOperator& g, const SubsetIndex& alpha);

/// Exact inverse of an elementary factor.
/// alpha empty: blockwise inversion of the multiplication; throws
/// SingularBlock naming the offending cell.
/// alpha nonempty: I - <K E^{-1}>_alpha assembled from the E field; throws
/// SingularE naming alpha and the cell where E is not invertible.
MixedOperator elementary_inverse(const MixedOperator& g, const SubsetIndex& alpha);

/// Ordered elementary factors; composing them left to right in the stored
/// order reproduces the factorized operator. Always one entry per subset of
/// {1,..,N}, ascending by size then lexicographically; subsets without a
/// genuine contribution carry identity factors.
struct Factorization {
    int N = 0;
    int M = 1;
    int p = 1;
    std::vector<std::pair<SubsetIndex, MixedOperator>> factors;
};

/// Peel-off factorization. The empty-subset factor is the multiplication
/// part; each later factor removes its subset's term from the running
/// remainder. After the last peel the remainder must match the identity
/// within 1e-10 * (1 + norm_L(input)); otherwise ResidueNotIdentity.
Factorization factorize(const MixedOperator& a);

/// compose all factors in stored (ascending) order.
MixedOperator factor_product(const Factorization& f);

/// Inverse through the factorization: the factor inverses composed in
/// reverse order. Throws the factorization errors for non-invertible input.
MixedOperator inverse(const MixedOperator& a);

} // namespace mixedop
