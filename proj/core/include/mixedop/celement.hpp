#pragma once

#include <map>

#include "mixedop/operator.hpp"

namespace mixedop {

/// An element of the commutative coefficient algebra: one scalar staircase
/// component per subset alpha of {1,..,N}, defined on the cells of the
/// complementary dimensions. Components are stored densely for all 2^N
/// subsets; multiplication and exponential act cellwise per component.
struct CElement {
    int N = 0;
    int p = 1;
    std::map<SubsetIndex, std::vector<Complex>> comps;

    static CElement zeros(int N, int p);
    /// The unit: every component identically one.
    static CElement ones(int N, int p);

    std::int64_t comp_size(const SubsetIndex& alpha) const {
        return cell_count(N - alpha.size(), p);
    }
    Complex& at(const SubsetIndex& alpha, std::int64_t cell);
    const Complex& at(const SubsetIndex& alpha, std::int64_t cell) const;
};

/// Trace of each term: tau_alpha(t) = h^|alpha| sum_s tr A_alpha[t ovr s, s],
/// a function of the coordinates outside alpha.
CElement trace(const MixedOperator& a);

CElement c_combine(Complex ca, const CElement& a, Complex cb, const CElement& b);
CElement c_multiply(const CElement& a, const CElement& b);
CElement c_exp(const CElement& a);
/// Sup norm: the largest component magnitude over all subsets and cells.
double c_norm(const CElement& a);
bool c_equal(const CElement& a, const CElement& b, double tol);

} // namespace mixedop
