#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace mixedop {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Small sizes only; everything is O(n^3)
/// textbook code so results are deterministic and dependency-free.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex factor) const;

    /// max_i sum_j |a_ij|
    double row_sum_norm() const;
    double max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> a_;
};

/// LU decomposition with partial pivoting. A pivot counts as singular when
/// its magnitude is at most 1e-12 times the largest entry of the pivot row
/// over the active columns at elimination time. Determinants stay computable
/// for singular input; solve/inverse throw SingularMatrix.
class LuDecomposition {
public:
    static LuDecomposition compute(ComplexMatrix a);

    bool singular() const { return singular_col_.has_value(); }
    std::optional<int> singular_col() const { return singular_col_; }

    /// Packed L\U factors (unit lower triangle implicit).
    const ComplexMatrix& factors() const { return lu_; }
    /// Sign of the row permutation.
    int parity() const { return sign_; }

    Complex determinant() const;
    /// Solve A x = b for each column of b.
    ComplexMatrix solve(const ComplexMatrix& rhs) const;
    ComplexMatrix inverse() const;

private:
    ComplexMatrix lu_;
    std::vector<int> perm_; // row permutation applied to the input
    int sign_ = 1;
    std::optional<int> singular_col_;
};

Complex determinant(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

/// All eigenvalues via Householder Hessenberg reduction followed by
/// explicitly shifted QR iteration (Wilkinson shift, deflation on negligible
/// subdiagonals). Throws NotConverged after 100 * n iterations.
std::vector<Complex> eigenvalues(ComplexMatrix a, double tol = 1e-12);

} // namespace mixedop
