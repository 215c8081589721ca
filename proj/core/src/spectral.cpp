#include "mixedop/spectral.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "mixedop/errors.hpp"

namespace mixedop {

MixedOperator resolvent(const MixedOperator& a, Complex lambda) {
    const MixedOperator shifted =
        linear_combine(lambda, identity_operator(a.N, a.M, a.p), -1.0, a);
    return inverse(shifted);
}

SpectrumReport spectrum_scan(const MixedOperator& a,
                             const std::vector<Complex>& grid,
                             std::optional<double> threshold) {
    SpectrumReport report;
    report.N = a.N;
    report.M = a.M;
    report.p = a.p;
    const double a_norm = norm_L(a);
    const MixedOperator ident = identity_operator(a.N, a.M, a.p);
    const std::vector<SubsetIndex> order = subsets_ascending(a.N);

    const auto scan_one = [&](Complex lambda) -> SpectrumPoint {
        SpectrumPoint point;
        point.lambda = lambda;
        point.threshold =
            threshold ? *threshold : 1e-8 * (1.0 + std::abs(lambda) + a_norm);

        MixedOperator current = linear_combine(lambda, ident, -1.0, a);
        current.canonicalize();
        bool dead = false;

        for (const SubsetIndex& alpha : order) {
            ComponentRecord rec;
            rec.alpha = alpha;
            if (dead) {
                point.components.push_back(std::move(rec));
                continue;
            }

            MixedOperator g = alpha.empty() ? zero_operator(a.N, a.M, a.p)
                                            : identity_operator(a.N, a.M, a.p);
            if (const StaircaseKernel* k = current.term(alpha)) g.set_term(*k);

            const EMatrixField field = build_E(g, alpha);
            const std::vector<Complex> dets = det_elementary(field);
            std::size_t argmin = 0;
            double best = std::abs(dets[0]);
            for (std::size_t i = 1; i < dets.size(); ++i) {
                const double v = std::abs(dets[i]);
                if (v < best) { best = v; argmin = i; }
            }
            rec.min_abs_pi = best;
            rec.argmin_cell = unflatten_cell(alpha.complement(a.N),
                                             static_cast<std::int64_t>(argmin), a.p);
            rec.flagged = best <= point.threshold;

            try {
                MixedOperator ginv = elementary_inverse(g, alpha);
                current = compose(ginv, current);
                rec.status = ComponentStatus::Computed;
            } catch (const SingularBlock&) {
                rec.status = ComponentStatus::SingularFactor;
                rec.flagged = true;
                dead = true;
            } catch (const SingularE&) {
                rec.status = ComponentStatus::SingularFactor;
                rec.flagged = true;
                dead = true;
            }
            point.components.push_back(std::move(rec));
        }
        return point;
    };

    // Grid points are independent; scan them on a small worker pool writing
    // disjoint slots, so the report is identical to a sequential pass.
    report.points.resize(grid.size());
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        std::min<std::size_t>(grid.size(), hw == 0 ? 1 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            report.points[i] = scan_one(grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < grid.size();
                         i = next.fetch_add(1))
                        report.points[i] = scan_one(grid[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> hold(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const SpectrumPoint& point : report.points)
        for (const ComponentRecord& rec : point.components)
            if (rec.flagged)
                report.flagged.push_back(
                    FlaggedHit{point.lambda, rec.alpha, rec.argmin_cell});
    return report;
}

} // namespace mixedop
