#include "mixedop/celement.hpp"

#include <algorithm>
#include <cmath>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

void check_same_shape(const CElement& a, const CElement& b, const char* what) {
    if (a.N != b.N || a.p != b.p)
        throw DimensionMismatch(std::string(what) + ": elements live on different grids");
}

} // namespace

CElement CElement::zeros(int N, int p) {
    CElement f;
    f.N = N;
    f.p = p;
    for (const SubsetIndex& alpha : subsets_ascending(N))
        f.comps.emplace(alpha, std::vector<Complex>(
                                   static_cast<std::size_t>(cell_count(N - alpha.size(), p))));
    return f;
}

CElement CElement::ones(int N, int p) {
    CElement f = zeros(N, p);
    for (auto& [alpha, values] : f.comps)
        std::fill(values.begin(), values.end(), Complex{1.0, 0.0});
    return f;
}

Complex& CElement::at(const SubsetIndex& alpha, std::int64_t cell) {
    return comps.at(alpha)[static_cast<std::size_t>(cell)];
}

const Complex& CElement::at(const SubsetIndex& alpha, std::int64_t cell) const {
    return comps.at(alpha)[static_cast<std::size_t>(cell)];
}

CElement trace(const MixedOperator& a) {
    CElement f = CElement::zeros(a.N, a.p);
    for (const auto& [alpha, k] : a.terms) {
        const SubsetIndex comp = alpha.complement(a.N);
        const std::int64_t bar_cnt = cell_count(comp.size(), a.p);
        const std::int64_t s_cnt = k.s_count();
        const auto merged = merge_table(comp, alpha, a.p);
        double hpow = 1.0;
        for (int d = 0; d < alpha.size(); ++d) hpow /= a.p;
        auto& values = f.comps.at(alpha);
        for (std::int64_t tb = 0; tb < bar_cnt; ++tb) {
            Complex acc{};
            for (std::int64_t s = 0; s < s_cnt; ++s) {
                const std::int64_t t = merged[static_cast<std::size_t>(tb * s_cnt + s)];
                for (int i = 0; i < a.M; ++i) acc += k.at(t, s, i, i);
            }
            values[static_cast<std::size_t>(tb)] = hpow * acc;
        }
    }
    return f;
}

CElement c_combine(Complex ca, const CElement& a, Complex cb, const CElement& b) {
    check_same_shape(a, b, "c_combine");
    CElement out = CElement::zeros(a.N, a.p);
    for (auto& [alpha, values] : out.comps) {
        const auto& va = a.comps.at(alpha);
        const auto& vb = b.comps.at(alpha);
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] = ca * va[i] + cb * vb[i];
    }
    return out;
}

CElement c_multiply(const CElement& a, const CElement& b) {
    check_same_shape(a, b, "c_multiply");
    CElement out = CElement::zeros(a.N, a.p);
    for (auto& [alpha, values] : out.comps) {
        const auto& va = a.comps.at(alpha);
        const auto& vb = b.comps.at(alpha);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = va[i] * vb[i];
    }
    return out;
}

CElement c_exp(const CElement& a) {
    CElement out = CElement::zeros(a.N, a.p);
    for (auto& [alpha, values] : out.comps) {
        const auto& va = a.comps.at(alpha);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::exp(va[i]);
    }
    return out;
}

double c_norm(const CElement& a) {
    double best = 0.0;
    for (const auto& [alpha, values] : a.comps)
        for (const Complex& c : values) best = std::max(best, std::abs(c));
    return best;
}

bool c_equal(const CElement& a, const CElement& b, double tol) {
    check_same_shape(a, b, "c_equal");
    const double ref = std::max({1.0, c_norm(a), c_norm(b)});
    const CElement diff = c_combine(1.0, a, -1.0, b);
    return c_norm(diff) <= tol * ref;
}

} // namespace mixedop
