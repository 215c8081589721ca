#include "mixedop/operator.hpp"

#include <algorithm>
#include <cmath>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

void check_same_space(int n1, int m1, int p1, int n2, int m2, int p2,
                      const char* what) {
    if (n1 != n2 || m1 != m2 || p1 != p2)
        throw DimensionMismatch(std::string(what) +
                                ": operands live on different grids");
}

double h_power(int p, int card) {
    double v = 1.0;
    for (int i = 0; i < card; ++i) v /= p;
    return v;
}

} // namespace

const StaircaseKernel* MixedOperator::term(const SubsetIndex& alpha) const {
    auto it = terms.find(alpha);
    return it == terms.end() ? nullptr : &it->second;
}

StaircaseKernel& MixedOperator::ensure_term(const SubsetIndex& alpha) {
    auto it = terms.find(alpha);
    if (it == terms.end())
        it = terms.emplace(alpha, StaircaseKernel::zeros(N, M, p, alpha)).first;
    return it->second;
}

void MixedOperator::set_term(StaircaseKernel k) {
    if (k.N != N || k.M != M || k.p != p)
        throw DimensionMismatch("set_term: kernel does not match operator grid");
    if (k.coeffs.size() != k.expected_size())
        throw DimensionMismatch("set_term: kernel coefficient count is wrong");
    SubsetIndex alpha = k.alpha;
    terms.insert_or_assign(std::move(alpha), std::move(k));
}

void MixedOperator::canonicalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.max_abs() <= 1e-300)
            it = terms.erase(it);
        else
            ++it;
    }
}

MixedOperator zero_operator(int N, int M, int p) { return {N, M, p}; }

MixedOperator identity_operator(int N, int M, int p) {
    MixedOperator a(N, M, p);
    StaircaseKernel k = StaircaseKernel::constant_scalar(N, M, p, SubsetIndex{}, 1.0);
    a.set_term(std::move(k));
    return a;
}

StaircaseFunction apply(const MixedOperator& a, const StaircaseFunction& u) {
    check_same_space(a.N, a.M, a.p, u.N, u.M, u.p, "apply");
    StaircaseFunction out = StaircaseFunction::zeros(a.N, a.M, a.p);
    const std::int64_t t_total = cell_count(a.N, a.p);
    const SubsetIndex whole = SubsetIndex::full(a.N);

    for (const auto& [alpha, k] : a.terms) {
        const int card = alpha.size();
        const std::int64_t s_cnt = cell_count(card, a.p);
        const double hpow = h_power(a.p, card);
        const SubsetIndex comp = alpha.complement(a.N);
        const auto to_comp = restriction_table(whole, comp, a.p);
        const auto merged = merge_table(comp, alpha, a.p);
        for (std::int64_t t = 0; t < t_total; ++t) {
            const std::int64_t tbar = to_comp[static_cast<std::size_t>(t)];
            for (std::int64_t s = 0; s < s_cnt; ++s) {
                const std::int64_t arg =
                    merged[static_cast<std::size_t>(tbar * s_cnt + s)];
                for (int i = 0; i < a.M; ++i) {
                    Complex acc{};
                    for (int j = 0; j < a.M; ++j)
                        acc += k.at(t, s, i, j) * u.at(arg, j);
                    out.at(t, i) += hpow * acc;
                }
            }
        }
    }
    return out;
}

MixedOperator scale(const MixedOperator& a, Complex factor) {
    MixedOperator out = a;
    for (auto& [alpha, k] : out.terms)
        for (Complex& c : k.coeffs) c *= factor;
    out.canonicalize();
    return out;
}

MixedOperator linear_combine(Complex ca, const MixedOperator& a,
                             Complex cb, const MixedOperator& b) {
    check_same_space(a.N, a.M, a.p, b.N, b.M, b.p, "linear_combine");
    MixedOperator out(a.N, a.M, a.p);
    for (const auto& [alpha, k] : a.terms) {
        StaircaseKernel& dst = out.ensure_term(alpha);
        for (std::size_t i = 0; i < k.coeffs.size(); ++i)
            dst.coeffs[i] += ca * k.coeffs[i];
    }
    for (const auto& [alpha, k] : b.terms) {
        StaircaseKernel& dst = out.ensure_term(alpha);
        for (std::size_t i = 0; i < k.coeffs.size(); ++i)
            dst.coeffs[i] += cb * k.coeffs[i];
    }
    out.canonicalize();
    return out;
}

MixedOperator compose(const MixedOperator& a, const MixedOperator& b) {
    check_same_space(a.N, a.M, a.p, b.N, b.M, b.p, "compose");
    const int N = a.N, M = a.M, p = a.p;
    MixedOperator out(N, M, p);
    const std::int64_t t_total = cell_count(N, p);
    const SubsetIndex whole = SubsetIndex::full(N);

    for (const auto& [gamma, ka] : a.terms) {
        for (const auto& [delta, kb] : b.terms) {
            const SubsetIndex uni = set_union(gamma, delta);
            const SubsetIndex inter = set_intersection(gamma, delta);
            const SubsetIndex gmd = set_difference(gamma, delta);
            const SubsetIndex comp_g = gamma.complement(N);

            const std::int64_t x_cnt = cell_count(uni.size(), p);
            const std::int64_t z_cnt = cell_count(inter.size(), p);
            const std::int64_t xg_cnt = cell_count(gmd.size(), p);
            const double hpow = h_power(p, inter.size());

            const auto x_to_gmd = restriction_table(uni, gmd, p);
            const auto x_to_delta = restriction_table(uni, delta, p);
            const auto t_to_comp = restriction_table(whole, comp_g, p);
            const auto s_of_a = merge_table(gmd, inter, p);   // -> gamma cells
            const auto m1 = merge_table(comp_g, inter, p);
            const auto m2 = merge_table(set_union(comp_g, inter), gmd, p);

            StaircaseKernel& dst = out.ensure_term(uni);
            for (std::int64_t t = 0; t < t_total; ++t) {
                const std::int64_t tc = t_to_comp[static_cast<std::size_t>(t)];
                for (std::int64_t x = 0; x < x_cnt; ++x) {
                    const std::int64_t xg = x_to_gmd[static_cast<std::size_t>(x)];
                    const std::int64_t xd = x_to_delta[static_cast<std::size_t>(x)];
                    for (std::int64_t z = 0; z < z_cnt; ++z) {
                        const std::int64_t sa =
                            s_of_a[static_cast<std::size_t>(xg * z_cnt + z)];
                        const std::int64_t tb = m2[static_cast<std::size_t>(
                            m1[static_cast<std::size_t>(tc * z_cnt + z)] * xg_cnt + xg)];
                        for (int i = 0; i < M; ++i)
                            for (int kk = 0; kk < M; ++kk) {
                                const Complex f = hpow * ka.at(t, sa, i, kk);
                                if (f == Complex{}) continue;
                                for (int j = 0; j < M; ++j)
                                    dst.at(t, x, i, j) += f * kb.at(tb, xd, kk, j);
                            }
                    }
                }
            }
        }
    }
    out.canonicalize();
    return out;
}

double norm_L(const MixedOperator& a) {
    double total = 0.0;
    for (const auto& [alpha, k] : a.terms) total += k.sup_row_norm();
    return total;
}

bool operator_equal(const MixedOperator& a, const MixedOperator& b, double tol) {
    const MixedOperator diff = linear_combine(1.0, a, -1.0, b);
    const double ref = std::max({1.0, norm_L(a), norm_L(b)});
    return norm_L(diff) <= tol * ref;
}

MixedOperator exp_operator(const MixedOperator& a, double tol) {
    const double nrm = norm_L(a);
    const double envelope = std::exp(nrm);
    int order = 0;
    double term = 1.0; // nrm^order / order!
    while (term * envelope > tol) {
        ++order;
        term *= nrm / order;
        if (order > 10000)
            throw NotConverged("exp_operator: series order exceeds 10000");
    }
    MixedOperator result = identity_operator(a.N, a.M, a.p);
    MixedOperator power = identity_operator(a.N, a.M, a.p);
    for (int n = 1; n <= order; ++n) {
        power = scale(compose(power, a), 1.0 / n);
        result = linear_combine(1.0, result, 1.0, power);
    }
    return result;
}

} // namespace mixedop
