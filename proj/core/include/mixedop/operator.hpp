#pragma once

#include <map>

#include "mixedop/kernel.hpp"

namespace mixedop {

/// An element of the staircase operator algebra on [0,1)^N with M-vector
/// values and mesh 1/p: a finite sum of partial integral terms, one kernel
/// per subset of {1,..,N}. Absent subsets count as zero terms. The empty
/// subset is the pointwise multiplication part.
struct MixedOperator {
    int N = 0;
    int M = 1;
    int p = 1;
    std::map<SubsetIndex, StaircaseKernel> terms;

    MixedOperator() = default;
    MixedOperator(int n, int m, int mesh) : N(n), M(m), p(mesh) {}

    double h() const { return 1.0 / p; }

    /// nullptr when the term is absent.
    const StaircaseKernel* term(const SubsetIndex& alpha) const;
    /// Inserts a zero kernel if absent.
    StaircaseKernel& ensure_term(const SubsetIndex& alpha);
    /// Inserts or replaces; the kernel must agree on N, M, p.
    void set_term(StaircaseKernel k);

    /// Drop terms whose coefficients are all below 1e-300 in magnitude.
    /// Never alters surviving values.
    void canonicalize();
};

MixedOperator zero_operator(int N, int M, int p);
/// The multiplicative identity: a single empty-subset term that is the
/// identity matrix on every cell.
MixedOperator identity_operator(int N, int M, int p);

/// Pointwise image (Au)(t) = sum_alpha h^|alpha| sum_s A_alpha[t,s] u(t ovr s),
/// where "t ovr s" replaces the alpha-coordinates of t by s.
StaircaseFunction apply(const MixedOperator& a, const StaircaseFunction& u);

MixedOperator scale(const MixedOperator& a, Complex factor);
MixedOperator linear_combine(Complex ca, const MixedOperator& a,
                             Complex cb, const MixedOperator& b);

/// Algebra product. Every pair of terms (gamma from a, delta from b)
/// contributes one gamma-union-delta term; coinciding integration
/// dimensions are contracted with weight h per dimension.
MixedOperator compose(const MixedOperator& a, const MixedOperator& b);

/// Sum over terms of the sup-cell row-sum block norm. Submultiplicative:
/// norm_L(compose(a, b)) <= norm_L(a) * norm_L(b).
double norm_L(const MixedOperator& a);

/// True when norm_L(a - b) <= tol * max(1, norm_L(a), norm_L(b)).
bool operator_equal(const MixedOperator& a, const MixedOperator& b, double tol);

/// Truncated exponential series sum_{n<=K} a^n/n! with K chosen so the
/// tail bound norm^K/K! * e^norm falls below tol.
MixedOperator exp_operator(const MixedOperator& a, double tol);

} // namespace mixedop
