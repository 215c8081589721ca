#include "mixedop/factorization.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

double h_power(int p, int card) {
    double v = 1.0;
    for (int i = 0; i < card; ++i) v /= p;
    return v;
}

void check_elementary_shape(const MixedOperator& g, const SubsetIndex& alpha,
                            const char* what) {
    for (const auto& [beta, k] : g.terms) {
        if (beta == alpha) continue;
        if (alpha.empty() || !beta.empty())
            throw std::invalid_argument(std::string(what) +
                                        ": operator has a term outside the factor shape");
        // nonempty alpha: the empty term must be the identity
        bool ok = true;
        for (std::int64_t t = 0; t < k.t_count() && ok; ++t)
            for (int i = 0; i < k.M && ok; ++i)
                for (int j = 0; j < k.M && ok; ++j) {
                    const Complex want = (i == j) ? Complex{1.0, 0.0} : Complex{};
                    if (std::abs(k.at(t, 0, i, j) - want) > 1e-12) ok = false;
                }
        if (!ok)
            throw std::invalid_argument(std::string(what) +
                                        ": empty-subset part of the factor is not the identity");
    }
}

} // namespace

ComplexMatrix SeparatedKernel::d_mat(std::int64_t s) const {
    ComplexMatrix d(r, M);
    for (int j = 0; j < M; ++j) d(static_cast<int>(s) * M + j, j) = 1.0;
    return d;
}

SeparatedKernel separate_variables(const StaircaseKernel& k) {
    SeparatedKernel sep;
    sep.alpha = k.alpha;
    sep.N = k.N;
    sep.M = k.M;
    sep.p = k.p;
    const std::int64_t s_cnt = k.s_count();
    sep.r = static_cast<int>(s_cnt) * k.M;
    const std::int64_t t_cnt = k.t_count();
    sep.c_mats.reserve(static_cast<std::size_t>(t_cnt));
    for (std::int64_t t = 0; t < t_cnt; ++t) {
        ComplexMatrix c(k.M, sep.r);
        for (std::int64_t s = 0; s < s_cnt; ++s)
            for (int i = 0; i < k.M; ++i)
                for (int j = 0; j < k.M; ++j)
                    c(i, static_cast<int>(s) * k.M + j) = k.at(t, s, i, j);
        sep.c_mats.push_back(std::move(c));
    }
    return sep;
}

EMatrixField build_E(const MixedOperator& g, const SubsetIndex& alpha) {
    check_elementary_shape(g, alpha, "build_E");
    EMatrixField field;
    field.alpha = alpha;
    field.N = g.N;
    field.M = g.M;
    field.p = g.p;

    if (alpha.empty()) {
        field.r = g.M;
        const std::int64_t t_cnt = cell_count(g.N, g.p);
        const StaircaseKernel* k = g.term(alpha);
        field.mats.reserve(static_cast<std::size_t>(t_cnt));
        for (std::int64_t t = 0; t < t_cnt; ++t) {
            ComplexMatrix m(g.M, g.M);
            if (k)
                for (int i = 0; i < g.M; ++i)
                    for (int j = 0; j < g.M; ++j) m(i, j) = k->at(t, 0, i, j);
            field.mats.push_back(std::move(m));
        }
        return field;
    }

    const std::int64_t s_cnt = cell_count(alpha.size(), g.p);
    field.r = static_cast<int>(s_cnt) * g.M;
    const SubsetIndex comp = alpha.complement(g.N);
    const std::int64_t bar_cnt = cell_count(comp.size(), g.p);
    const auto merged = merge_table(comp, alpha, g.p);
    const double hpow = h_power(g.p, alpha.size());
    const StaircaseKernel* k = g.term(alpha);

    field.mats.reserve(static_cast<std::size_t>(bar_cnt));
    for (std::int64_t tb = 0; tb < bar_cnt; ++tb) {
        ComplexMatrix e = ComplexMatrix::identity(field.r);
        if (k)
            for (std::int64_t s = 0; s < s_cnt; ++s) {
                const std::int64_t t = merged[static_cast<std::size_t>(tb * s_cnt + s)];
                for (std::int64_t sp = 0; sp < s_cnt; ++sp)
                    for (int i = 0; i < g.M; ++i)
                        for (int j = 0; j < g.M; ++j)
                            e(static_cast<int>(s) * g.M + i,
                              static_cast<int>(sp) * g.M + j) += hpow * k->at(t, sp, i, j);
            }
        field.mats.push_back(std::move(e));
    }
    return field;
}

MixedOperator elementary_inverse(const MixedOperator& g, const SubsetIndex& alpha) {
    const EMatrixField field = build_E(g, alpha);

    if (alpha.empty()) {
        MixedOperator out(g.N, g.M, g.p);
        StaircaseKernel inv_k = StaircaseKernel::zeros(g.N, g.M, g.p, alpha);
        const std::int64_t t_cnt = cell_count(g.N, g.p);
        const SubsetIndex whole = SubsetIndex::full(g.N);
        for (std::int64_t t = 0; t < t_cnt; ++t) {
            const auto lu = LuDecomposition::compute(field.mats[static_cast<std::size_t>(t)]);
            if (lu.singular()) {
                const std::string cell = unflatten_cell(whole, t, g.p).to_string();
                throw SingularBlock("multiplication block is singular at cell " + cell, cell);
            }
            const ComplexMatrix inv = lu.inverse();
            for (int i = 0; i < g.M; ++i)
                for (int j = 0; j < g.M; ++j) inv_k.at(t, 0, i, j) = inv(i, j);
        }
        out.set_term(std::move(inv_k));
        return out;
    }

    const StaircaseKernel* k = g.term(alpha);
    if (!k) return identity_operator(g.N, g.M, g.p);

    const SubsetIndex comp = alpha.complement(g.N);
    const std::int64_t bar_cnt = cell_count(comp.size(), g.p);
    std::vector<ComplexMatrix> e_inv;
    e_inv.reserve(static_cast<std::size_t>(bar_cnt));
    for (std::int64_t tb = 0; tb < bar_cnt; ++tb) {
        const auto lu = LuDecomposition::compute(field.mats[static_cast<std::size_t>(tb)]);
        if (lu.singular()) {
            const std::string cell = unflatten_cell(comp, tb, g.p).to_string();
            throw SingularE("elementary factor for subset " + alpha.to_string() +
                                " has a singular E matrix at cell " + cell,
                            alpha.to_string(), cell);
        }
        e_inv.push_back(lu.inverse());
    }

    const std::int64_t s_cnt = k->s_count();
    const std::int64_t t_cnt = k->t_count();
    const auto to_bar = restriction_table(SubsetIndex::full(g.N), comp, g.p);
    StaircaseKernel hk = StaircaseKernel::zeros(g.N, g.M, g.p, alpha);
    for (std::int64_t t = 0; t < t_cnt; ++t) {
        const ComplexMatrix& einv = e_inv[static_cast<std::size_t>(to_bar[static_cast<std::size_t>(t)])];
        for (std::int64_t sp = 0; sp < s_cnt; ++sp)
            for (int i = 0; i < g.M; ++i)
                for (int l = 0; l < g.M; ++l) {
                    Complex acc{};
                    for (std::int64_t s = 0; s < s_cnt; ++s)
                        for (int j = 0; j < g.M; ++j)
                            acc += k->at(t, s, i, j) *
                                   einv(static_cast<int>(s) * g.M + j,
                                        static_cast<int>(sp) * g.M + l);
                    hk.at(t, sp, i, l) = -acc;
                }
    }
    MixedOperator out = identity_operator(g.N, g.M, g.p);
    out.set_term(std::move(hk));
    return out;
}

Factorization factorize(const MixedOperator& a) {
    Factorization f;
    f.N = a.N;
    f.M = a.M;
    f.p = a.p;
    const double input_norm = norm_L(a);
    MixedOperator current = a;
    current.canonicalize();

    for (const SubsetIndex& alpha : subsets_ascending(a.N)) {
        if (alpha.empty()) {
            MixedOperator g = zero_operator(a.N, a.M, a.p);
            if (const StaircaseKernel* k = current.term(alpha)) g.set_term(*k);
            MixedOperator ginv = elementary_inverse(g, alpha);
            current = compose(ginv, current);
            f.factors.emplace_back(alpha, std::move(g));
            continue;
        }
        const StaircaseKernel* k = current.term(alpha);
        if (!k) {
            f.factors.emplace_back(alpha, identity_operator(a.N, a.M, a.p));
            continue;
        }
        MixedOperator g = identity_operator(a.N, a.M, a.p);
        g.set_term(*k);
        MixedOperator ginv = elementary_inverse(g, alpha);
        current = compose(ginv, current);
        f.factors.emplace_back(alpha, std::move(g));
    }

    const MixedOperator ident = identity_operator(a.N, a.M, a.p);
    const double residue = norm_L(linear_combine(1.0, current, -1.0, ident));
    const double bound = 1e-10 * (1.0 + input_norm);
    if (residue > bound) {
        std::ostringstream msg;
        msg << "factorize: peel-off remainder deviates from the identity by "
            << residue << " (allowed " << bound << ")";
        throw ResidueNotIdentity(msg.str());
    }
    return f;
}

MixedOperator factor_product(const Factorization& f) {
    MixedOperator acc = identity_operator(f.N, f.M, f.p);
    for (const auto& [alpha, g] : f.factors) acc = compose(acc, g);
    return acc;
}

MixedOperator inverse(const MixedOperator& a) {
    const Factorization f = factorize(a);
    MixedOperator inv = identity_operator(a.N, a.M, a.p);
    for (const auto& [alpha, g] : f.factors)
        inv = compose(elementary_inverse(g, alpha), inv);
    return inv;
}

} // namespace mixedop
