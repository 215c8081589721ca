#include "mixedop/determinant.hpp"

#include <cmath>
#include <numeric>
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

// det(m)/rows! evaluated as a running product of pivot/index ratios so that
// neither factor overflows on its own.
Complex det_over_factorial(const ComplexMatrix& m) {
    const auto lu = LuDecomposition::compute(m);
    Complex acc{static_cast<double>(lu.parity()), 0.0};
    for (int i = 0; i < m.rows(); ++i)
        acc *= lu.factors()(i, i) / static_cast<double>(i + 1);
    return acc;
}

} // namespace

std::vector<Complex> det_elementary(const EMatrixField& field) {
    std::vector<Complex> dets;
    dets.reserve(field.mats.size());
    for (const ComplexMatrix& m : field.mats)
        dets.push_back(LuDecomposition::compute(m).determinant());
    return dets;
}

CElement determinant(const MixedOperator& a) {
    const Factorization f = factorize(a);
    CElement pi = CElement::ones(a.N, a.p);
    for (const auto& [alpha, g] : f.factors) {
        const EMatrixField field = build_E(g, alpha);
        const std::vector<Complex> dets = det_elementary(field);
        auto& comp = pi.comps.at(alpha);
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = dets[i];
    }
    return pi;
}

CElement det_fredholm(const MixedOperator& a, int n_max, double budget) {
    const SubsetIndex* alpha = nullptr;
    const StaircaseKernel* k = nullptr;
    for (const auto& [beta, kern] : a.terms) {
        if (beta.empty()) {
            for (std::int64_t t = 0; t < kern.t_count(); ++t)
                for (int i = 0; i < kern.M; ++i)
                    for (int j = 0; j < kern.M; ++j) {
                        const Complex want = (i == j) ? Complex{1.0, 0.0} : Complex{};
                        if (std::abs(kern.at(t, 0, i, j) - want) > 1e-12)
                            throw std::invalid_argument(
                                "det_fredholm: empty-subset term is not the identity");
                    }
            continue;
        }
        if (alpha)
            throw std::invalid_argument(
                "det_fredholm: more than one nonempty term; not an elementary factor");
        alpha = &beta;
        k = &kern;
    }

    CElement pi = CElement::ones(a.N, a.p);
    if (!alpha) return pi; // plain identity

    // The expansion runs over the finite point set (cell, component): the
    // kernel acts on M p^|alpha| scalar degrees of freedom, each point
    // carrying the cell weight h^|alpha|. A tuple that repeats a point has
    // two equal minor rows, and the orderings of a distinct-point tuple all
    // share one determinant, which cancels the 1/n! of the series; so the
    // sum below visits each strictly increasing tuple once. Orders beyond
    // the rank have no such tuples and are dropped up front. The budget
    // still charges the nominal series size, which is the documented cost
    // measure, not the reduced enumeration.
    const int M = a.M;
    const std::int64_t s_cnt = k->s_count();
    const std::int64_t rank = s_cnt * M;
    const std::int64_t cap =
        (n_max < 0) ? rank : std::min<std::int64_t>(n_max, rank);
    const SubsetIndex comp = alpha->complement(a.N);
    const std::int64_t bar_cnt = cell_count(comp.size(), a.p);

    double planned = 0.0;
    double tuples = 1.0;
    for (std::int64_t n = 1; n <= cap; ++n) {
        tuples *= static_cast<double>(rank);
        planned += tuples * static_cast<double>(bar_cnt);
    }
    if (planned > budget) {
        std::ostringstream msg;
        msg << "det_fredholm: " << planned << " summands planned, budget is " << budget;
        throw BudgetExceeded(msg.str());
    }

    const auto merged = merge_table(comp, *alpha, a.p);
    const double h_a = h_power(a.p, alpha->size());
    auto& out = pi.comps.at(*alpha);

    for (std::int64_t tb = 0; tb < bar_cnt; ++tb) {
        Complex total{1.0, 0.0};
        double coeff = 1.0; // h^{n|alpha|}
        for (std::int64_t n = 1; n <= cap; ++n) {
            coeff *= h_a;
            std::vector<std::int64_t> tup(static_cast<std::size_t>(n));
            std::iota(tup.begin(), tup.end(), std::int64_t{0});
            Complex order_sum{};
            bool done = false;
            while (!done) {
                ComplexMatrix minor(static_cast<int>(n), static_cast<int>(n));
                for (std::int64_t row = 0; row < n; ++row) {
                    const std::int64_t q_row = tup[static_cast<std::size_t>(row)];
                    const std::int64_t t =
                        merged[static_cast<std::size_t>(tb * s_cnt + q_row / M)];
                    const int i = static_cast<int>(q_row % M);
                    for (std::int64_t col = 0; col < n; ++col) {
                        const std::int64_t q_col = tup[static_cast<std::size_t>(col)];
                        minor(static_cast<int>(row), static_cast<int>(col)) =
                            k->at(t, q_col / M, i, static_cast<int>(q_col % M));
                    }
                }
                order_sum += LuDecomposition::compute(minor).determinant();
                int pos = static_cast<int>(n) - 1;
                while (pos >= 0 &&
                       tup[static_cast<std::size_t>(pos)] == rank - n + pos)
                    --pos;
                if (pos < 0) {
                    done = true;
                } else {
                    ++tup[static_cast<std::size_t>(pos)];
                    for (std::size_t j = static_cast<std::size_t>(pos) + 1;
                         j < tup.size(); ++j)
                        tup[j] = tup[j - 1] + 1;
                }
            }
            total += coeff * order_sum;
        }
        out[static_cast<std::size_t>(tb)] = total;
    }
    return pi;
}

CElement det_plemelj_smithies(const MixedOperator& b, double tol, int n_max) {
    const double norm = norm_L(b);
    const long total_rank = static_cast<long>(b.M) * cell_count(b.N, b.p);
    long cap;
    if (n_max >= 0) {
        cap = n_max;
        if (norm >= 1.0 && cap > total_rank)
            throw NotConverged(
                "det_plemelj_smithies: norm is not below one and the requested order "
                "exceeds the total rank; no convergence guard applies");
    } else {
        cap = (norm < 1.0) ? 10000 : total_rank;
    }

    CElement result = CElement::ones(b.N, b.p);
    std::vector<CElement> taus; // taus[m-1] = trace(b^m)
    MixedOperator power = b;

    for (long n = 1; n <= cap; ++n) {
        if (n > 1) power = compose(power, b);
        taus.push_back(trace(power));

        double term_sup = 0.0;
        for (auto& [alpha, values] : result.comps) {
            const std::size_t cells = values.size();
            for (std::size_t cell = 0; cell < cells; ++cell) {
                ComplexMatrix mn(static_cast<int>(n), static_cast<int>(n));
                for (int row = 0; row < n; ++row)
                    for (int col = 0; col <= std::min<long>(row + 1, n - 1); ++col) {
                        if (col <= row)
                            mn(row, col) =
                                taus[static_cast<std::size_t>(row - col)].comps.at(alpha)[cell];
                        else
                            mn(row, col) = Complex{static_cast<double>(n - 1 - row), 0.0};
                    }
                const Complex dn_over_fact = det_over_factorial(mn);
                values[cell] += dn_over_fact;
                term_sup = std::max(term_sup, std::abs(dn_over_fact));
            }
        }
        if (n >= 2 && term_sup <= tol) return result;
        if (norm >= 1.0 && n == total_rank) return result; // polynomial is complete
    }
    if (n_max >= 0) return result; // caller fixed the order
    throw NotConverged("det_plemelj_smithies: series did not settle within 10000 orders");
}

CElement det_log_series(const MixedOperator& b, double tol) {
    const double norm = norm_L(b);
    if (norm >= 1.0) {
        std::ostringstream msg;
        msg << "det_log_series: operator norm " << norm << " is not below one";
        throw NormTooLarge(msg.str());
    }
    CElement lnpi = CElement::zeros(b.N, b.p);
    MixedOperator power = b;
    double majorant_pow = 1.0;
    for (int n = 1;; ++n) {
        if (n > 10000)
            throw NotConverged("det_log_series: series did not settle within 10000 orders");
        if (n > 1) power = compose(power, b);
        const CElement tau = trace(power);
        const double sgn = (n % 2 == 0) ? -1.0 : 1.0; // -(-1)^n
        lnpi = c_combine(1.0, lnpi, sgn / n, tau);
        majorant_pow *= norm;
        if (b.M * majorant_pow / n <= tol) break;
    }
    return c_exp(lnpi);
}

} // namespace mixedop
