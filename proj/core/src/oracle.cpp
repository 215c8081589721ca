#include "mixedop/oracle.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

double h_power(int p, int card) {
    double v = 1.0;
    for (int i = 0; i < card; ++i) v /= p;
    return v;
}

std::int64_t checked_dim(const MixedOperator& a) {
    const std::int64_t dim = static_cast<std::int64_t>(a.M) * cell_count(a.N, a.p);
    const int cap = oracle_dim_cap();
    if (dim > cap) {
        std::ostringstream msg;
        msg << "full matrix dimension " << dim << " exceeds the cap " << cap;
        throw SizeCapExceeded(msg.str());
    }
    return dim;
}

} // namespace

int oracle_dim_cap() {
    if (const char* env = std::getenv("MIXEDOP_MAX_ORACLE_DIM")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 1000000) return static_cast<int>(v);
    }
    return 512;
}

ComplexMatrix full_matrix(const MixedOperator& a) {
    const std::int64_t dim = checked_dim(a);
    const std::int64_t t_total = cell_count(a.N, a.p);
    const SubsetIndex whole = SubsetIndex::full(a.N);
    ComplexMatrix f(static_cast<int>(dim), static_cast<int>(dim));

    for (const auto& [alpha, k] : a.terms) {
        const SubsetIndex comp = alpha.complement(a.N);
        const auto to_comp = restriction_table(whole, comp, a.p);
        const auto to_alpha = restriction_table(whole, alpha, a.p);
        const double hpow = h_power(a.p, alpha.size());
        for (std::int64_t t = 0; t < t_total; ++t)
            for (std::int64_t tp = 0; tp < t_total; ++tp) {
                if (to_comp[static_cast<std::size_t>(t)] !=
                    to_comp[static_cast<std::size_t>(tp)])
                    continue;
                const std::int64_t s = to_alpha[static_cast<std::size_t>(tp)];
                for (int i = 0; i < a.M; ++i)
                    for (int j = 0; j < a.M; ++j)
                        f(static_cast<int>(t) * a.M + i,
                          static_cast<int>(tp) * a.M + j) += hpow * k.at(t, s, i, j);
            }
    }
    return f;
}

ComplexMatrix function_as_column(const StaircaseFunction& u) {
    const std::int64_t t_total = u.t_count();
    ComplexMatrix col(static_cast<int>(t_total) * u.M, 1);
    for (std::int64_t t = 0; t < t_total; ++t)
        for (int i = 0; i < u.M; ++i)
            col(static_cast<int>(t) * u.M + i, 0) = u.at(t, i);
    return col;
}

StaircaseFunction column_as_function(const ComplexMatrix& col, int N, int M, int p) {
    StaircaseFunction u = StaircaseFunction::zeros(N, M, p);
    const std::int64_t t_total = u.t_count();
    if (col.rows() != t_total * M || col.cols() != 1)
        throw DimensionMismatch("column_as_function: column has the wrong size");
    for (std::int64_t t = 0; t < t_total; ++t)
        for (int i = 0; i < M; ++i) u.at(t, i) = col(static_cast<int>(t) * M + i, 0);
    return u;
}

Complex oracle_det(const MixedOperator& a) {
    return LuDecomposition::compute(full_matrix(a)).determinant();
}

std::vector<Complex> oracle_eigenvalues(const MixedOperator& a) {
    return eigenvalues(full_matrix(a));
}

ComplexMatrix oracle_inverse(const MixedOperator& a) {
    const auto lu = LuDecomposition::compute(full_matrix(a));
    if (lu.singular())
        throw SingularMatrix("oracle_inverse: full matrix is singular");
    return lu.inverse();
}

} // namespace mixedop
