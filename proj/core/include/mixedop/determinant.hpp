#pragma once

#include "mixedop/celement.hpp"
#include "mixedop/factorization.hpp"

namespace mixedop {

/// Cellwise determinants of an E field (for the empty subset: of the
/// multiplication blocks themselves).
std::vector<Complex> det_elementary(const EMatrixField& field);

/// Determinant of `a` through the peel-off factorization: the component for
/// each subset collects the cellwise determinants of that factor's E field.
/// Multiplicative: determinant(compose(a,b)) = c_multiply of the two.
/// Propagates the factorization errors when `a` is not invertible.
CElement determinant(const MixedOperator& a);

/// Fredholm series for det(I + <K>_alpha). The argument must carry exactly
/// one nonempty term; an empty-subset term is allowed only when it is the
/// identity (it contributes the leading 1). Orders above M p^|alpha| are
/// dropped: their integrands repeat an integration point, so the minors
/// vanish exactly. n_max < 0 means all contributing orders.
/// Throws BudgetExceeded when the planned number of tuple summands tops
/// `budget`, std::invalid_argument when the shape is wrong.
CElement det_fredholm(const MixedOperator& a, int n_max = -1, double budget = 1e7);

/// Plemelj-Smithies series for det(I + b): per component and cell,
/// 1 + sum_n d_n/n! with d_n the usual trace-moment determinant of order n.
/// Convergence guard: either norm_L(b) < 1, or the order is capped by the
/// total rank M p^N (the series is a polynomial of that degree); otherwise
/// NotConverged. n_max < 0 selects the default cap; the series stops early
/// once an additive term falls below tol everywhere.
CElement det_plemelj_smithies(const MixedOperator& b, double tol = 1e-12,
                              int n_max = -1);

/// Logarithmic trace series for det(I + b):
///   ln pi = - sum_{n>=1} (-1)^n trace(b^n) / n,  exponentiated cellwise.
/// Requires norm_L(b) < 1 (NormTooLarge otherwise); truncates once the
/// majorant M * norm^n / n drops below tol, gives up past order 10000
/// (NotConverged).
CElement det_log_series(const MixedOperator& b, double tol = 1e-12);

} // namespace mixedop
