#include "mixedop/random_ops.hpp"

#include "mixedop/determinant.hpp"
#include "mixedop/errors.hpp"

namespace mixedop {

Complex random_complex(Rng& rng, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

namespace {

StaircaseKernel random_kernel(Rng& rng, int N, int M, int p,
                              const SubsetIndex& alpha, double scale) {
    StaircaseKernel k = StaircaseKernel::zeros(N, M, p, alpha);
    for (Complex& c : k.coeffs) c = random_complex(rng, scale);
    return k;
}

} // namespace

MixedOperator random_operator(Rng& rng, int N, int M, int p, double scale) {
    MixedOperator a(N, M, p);
    for (const SubsetIndex& alpha : subsets_ascending(N))
        a.set_term(random_kernel(rng, N, M, p, alpha, scale));
    return a;
}

MixedOperator random_sparse_operator(Rng& rng, int N, int M, int p, double keep,
                                     double scale) {
    MixedOperator a(N, M, p);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (const SubsetIndex& alpha : subsets_ascending(N)) {
        const bool kept = coin(rng) < keep;
        StaircaseKernel k = random_kernel(rng, N, M, p, alpha, scale);
        if (kept) a.set_term(std::move(k));
    }
    return a;
}

StaircaseFunction random_function(Rng& rng, int N, int M, int p, double scale) {
    StaircaseFunction u = StaircaseFunction::zeros(N, M, p);
    for (Complex& c : u.values) c = random_complex(rng, scale);
    return u;
}

MixedOperator random_bounded(Rng& rng, int N, int M, int p, double lo, double hi) {
    MixedOperator b = random_operator(rng, N, M, p, 1.0);
    std::uniform_real_distribution<double> dist(lo, hi);
    const double target = dist(rng);
    const double norm = norm_L(b);
    return scale(b, Complex{target / norm, 0.0});
}

MixedOperator random_near_identity(Rng& rng, int N, int M, int p,
                                   double lo, double hi) {
    const MixedOperator b = random_bounded(rng, N, M, p, lo, hi);
    return linear_combine(1.0, identity_operator(N, M, p), 1.0, b);
}

MixedOperator random_elementary(Rng& rng, int N, int M, int p,
                                const SubsetIndex& alpha, double scale) {
    if (alpha.empty()) {
        MixedOperator g = identity_operator(N, M, p);
        StaircaseKernel& k = g.ensure_term(alpha);
        for (Complex& c : k.coeffs) c += random_complex(rng, scale * 0.4);
        return g;
    }
    MixedOperator g = identity_operator(N, M, p);
    g.set_term(random_kernel(rng, N, M, p, alpha, scale));
    return g;
}

MixedOperator random_invertible_elementary(Rng& rng, int N, int M, int p,
                                           const SubsetIndex& alpha, double scale) {
    double s = scale;
    for (int attempt = 0; attempt < 200; ++attempt) {
        MixedOperator g = random_elementary(rng, N, M, p, alpha, s);
        try {
            const EMatrixField field = build_E(g, alpha);
            bool comfortable = true;
            for (const Complex& d : det_elementary(field))
                if (std::abs(d) < 0.05) { comfortable = false; break; }
            if (!comfortable) { s *= 0.7; continue; }
            (void)elementary_inverse(g, alpha);
            return g;
        } catch (const Error&) {
            s *= 0.7;
        }
    }
    throw NotConverged("random_invertible_elementary: no invertible draw found");
}

MixedOperator random_invertible(Rng& rng, int N, int M, int p, double keep,
                                double scale) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    MixedOperator acc = identity_operator(N, M, p);
    for (const SubsetIndex& alpha : subsets_ascending(N)) {
        const bool kept = alpha.empty() || coin(rng) < keep;
        MixedOperator g = random_invertible_elementary(rng, N, M, p, alpha, scale);
        if (kept) acc = compose(acc, g);
    }
    return acc;
}

MixedOperator random_constant_kernel(Rng& rng, int N, int M, int p, double scale) {
    MixedOperator a(N, M, p);
    for (const SubsetIndex& alpha : subsets_ascending(N)) {
        StaircaseKernel k = StaircaseKernel::zeros(N, M, p, alpha);
        std::vector<Complex> block(static_cast<std::size_t>(M) * M);
        for (Complex& c : block) c = random_complex(rng, scale);
        const std::int64_t t_cnt = k.t_count();
        const std::int64_t s_cnt = k.s_count();
        for (std::int64_t t = 0; t < t_cnt; ++t)
            for (std::int64_t s = 0; s < s_cnt; ++s)
                for (int i = 0; i < M; ++i)
                    for (int j = 0; j < M; ++j)
                        k.at(t, s, i, j) = block[static_cast<std::size_t>(i) * M + j];
        a.set_term(std::move(k));
    }
    return a;
}

} // namespace mixedop
