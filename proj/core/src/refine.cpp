#include "mixedop/refine.hpp"

#include <stdexcept>

namespace mixedop {

namespace {

// Fine flat cell index -> flat index of the containing coarse cell.
std::vector<std::int64_t> coarsen_table(int card, int p_coarse, int factor) {
    const int p_fine = p_coarse * factor;
    const std::int64_t fine_cnt = cell_count(card, p_fine);
    std::vector<std::int64_t> table(static_cast<std::size_t>(fine_cnt));
    for (std::int64_t f = 0; f < fine_cnt; ++f) {
        std::int64_t rem = f;
        std::int64_t coarse = 0;
        // peel digits most significant first
        std::int64_t scale_fine = fine_cnt;
        for (int d = 0; d < card; ++d) {
            scale_fine /= p_fine;
            const std::int64_t digit = rem / scale_fine;
            rem %= scale_fine;
            coarse = coarse * p_coarse + digit / factor;
        }
        table[static_cast<std::size_t>(f)] = coarse;
    }
    return table;
}

} // namespace

MixedOperator refine_operator(const MixedOperator& a, int factor) {
    if (factor < 1) throw std::invalid_argument("refine_operator: factor must be >= 1");
    if (factor == 1) return a;
    const int p_fine = a.p * factor;
    MixedOperator out(a.N, a.M, p_fine);
    const auto t_map = coarsen_table(a.N, a.p, factor);
    for (const auto& [alpha, k] : a.terms) {
        const auto s_map = coarsen_table(alpha.size(), a.p, factor);
        StaircaseKernel fine = StaircaseKernel::zeros(a.N, a.M, p_fine, alpha);
        const std::int64_t t_cnt = fine.t_count();
        const std::int64_t s_cnt = fine.s_count();
        for (std::int64_t t = 0; t < t_cnt; ++t)
            for (std::int64_t s = 0; s < s_cnt; ++s) {
                const std::int64_t tc = t_map[static_cast<std::size_t>(t)];
                const std::int64_t sc = s_map[static_cast<std::size_t>(s)];
                for (int i = 0; i < a.M; ++i)
                    for (int j = 0; j < a.M; ++j)
                        fine.at(t, s, i, j) = k.at(tc, sc, i, j);
            }
        out.set_term(std::move(fine));
    }
    return out;
}

StaircaseFunction refine_function(const StaircaseFunction& u, int factor) {
    if (factor < 1) throw std::invalid_argument("refine_function: factor must be >= 1");
    if (factor == 1) return u;
    const int p_fine = u.p * factor;
    StaircaseFunction out = StaircaseFunction::zeros(u.N, u.M, p_fine);
    const auto t_map = coarsen_table(u.N, u.p, factor);
    const std::int64_t t_cnt = out.t_count();
    for (std::int64_t t = 0; t < t_cnt; ++t) {
        const std::int64_t tc = t_map[static_cast<std::size_t>(t)];
        for (int i = 0; i < u.M; ++i) out.at(t, i) = u.at(tc, i);
    }
    return out;
}

} // namespace mixedop
