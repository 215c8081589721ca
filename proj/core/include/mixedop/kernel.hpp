#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mixedop/cell.hpp"
#include "mixedop/subset.hpp"

namespace mixedop {

using Complex = std::complex<double>;

/// Coefficient tensor of one integral term: an M x M matrix block per pair
/// (t, s) where t runs over the p^N cells of the full cube and s over the
/// p^|alpha| cells of the integration subset. For the empty subset the
/// s axis has a single slot.
struct StaircaseKernel {
    int N = 0;
    int M = 0;
    int p = 0;
    SubsetIndex alpha;
    std::vector<Complex> coeffs; // ((t * s_count + s) * M + i) * M + j

    static StaircaseKernel zeros(int N, int M, int p, SubsetIndex alpha);
    /// Every (t, s) block equal to `value` times the identity matrix.
    static StaircaseKernel constant_scalar(int N, int M, int p,
                                           SubsetIndex alpha, Complex value);

    std::int64_t t_count() const { return cell_count(N, p); }
    std::int64_t s_count() const { return cell_count(alpha.size(), p); }
    std::size_t expected_size() const {
        return static_cast<std::size_t>(t_count() * s_count()) *
               static_cast<std::size_t>(M) * static_cast<std::size_t>(M);
    }

    Complex& at(std::int64_t t, std::int64_t s, int i, int j) {
        return coeffs[static_cast<std::size_t>(((t * s_count() + s) * M + i) * M + j)];
    }
    const Complex& at(std::int64_t t, std::int64_t s, int i, int j) const {
        return coeffs[static_cast<std::size_t>(((t * s_count() + s) * M + i) * M + j)];
    }

    double max_abs() const;
    /// sup over (t, s) of the row-sum matrix norm of the block; the
    /// contribution of this term to the operator norm.
    double sup_row_norm() const;
};

/// A vector-valued function constant on each cell of the full grid.
struct StaircaseFunction {
    int N = 0;
    int M = 0;
    int p = 0;
    std::vector<Complex> values; // t * M + i

    static StaircaseFunction zeros(int N, int M, int p);
    static StaircaseFunction constant(int N, int M, int p, Complex value);

    std::int64_t t_count() const { return cell_count(N, p); }

    Complex& at(std::int64_t t, int i) {
        return values[static_cast<std::size_t>(t * M + i)];
    }
    const Complex& at(std::int64_t t, int i) const {
        return values[static_cast<std::size_t>(t * M + i)];
    }

    double max_abs() const;
};

} // namespace mixedop
