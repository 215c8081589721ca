#include "mixedop/kernel.hpp"

#include <algorithm>

namespace mixedop {

StaircaseKernel StaircaseKernel::zeros(int N, int M, int p, SubsetIndex alpha) {
    StaircaseKernel k;
    k.N = N;
    k.M = M;
    k.p = p;
    k.alpha = std::move(alpha);
    k.coeffs.assign(k.expected_size(), Complex{0.0, 0.0});
    return k;
}

StaircaseKernel StaircaseKernel::constant_scalar(int N, int M, int p,
                                                 SubsetIndex alpha, Complex value) {
    StaircaseKernel k = zeros(N, M, p, std::move(alpha));
    for (std::int64_t t = 0; t < k.t_count(); ++t)
        for (std::int64_t s = 0; s < k.s_count(); ++s)
            for (int i = 0; i < M; ++i)
                k.at(t, s, i, i) = value;
    return k;
}

double StaircaseKernel::max_abs() const {
    double m = 0.0;
    for (const Complex& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

double StaircaseKernel::sup_row_norm() const {
    double sup = 0.0;
    for (std::int64_t t = 0; t < t_count(); ++t)
        for (std::int64_t s = 0; s < s_count(); ++s)
            for (int i = 0; i < M; ++i) {
                double row = 0.0;
                for (int j = 0; j < M; ++j) row += std::abs(at(t, s, i, j));
                sup = std::max(sup, row);
            }
    return sup;
}

StaircaseFunction StaircaseFunction::zeros(int N, int M, int p) {
    StaircaseFunction f;
    f.N = N;
    f.M = M;
    f.p = p;
    f.values.assign(static_cast<std::size_t>(f.t_count() * M), Complex{0.0, 0.0});
    return f;
}

StaircaseFunction StaircaseFunction::constant(int N, int M, int p, Complex value) {
    StaircaseFunction f = zeros(N, M, p);
    std::fill(f.values.begin(), f.values.end(), value);
    return f;
}

double StaircaseFunction::max_abs() const {
    double m = 0.0;
    for (const Complex& c : values) m = std::max(m, std::abs(c));
    return m;
}

} // namespace mixedop
