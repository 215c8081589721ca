#include "mixedop/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

constexpr double kPivotThreshold = 1e-12;

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols())
        throw DimensionMismatch(std::string(what) + ": matrix must be square");
}

} // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product: inner dimensions differ");
    ComplexMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Complex v = (*this)(i, k);
            if (v == Complex{}) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) += v * rhs(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference: shapes differ");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * factor;
    return out;
}

double ComplexMatrix::row_sum_norm() const {
    double best = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double row = 0.0;
        for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& c : a_) best = std::max(best, std::abs(c));
    return best;
}

LuDecomposition LuDecomposition::compute(ComplexMatrix a) {
    require_square(a, "LU");
    const int n = a.rows();
    LuDecomposition d;
    d.lu_ = std::move(a);
    d.perm_.resize(static_cast<std::size_t>(n));
    std::iota(d.perm_.begin(), d.perm_.end(), 0);

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(d.lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(d.lu_(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(d.lu_(k, j), d.lu_(piv, j));
            std::swap(d.perm_[static_cast<std::size_t>(k)],
                      d.perm_[static_cast<std::size_t>(piv)]);
            d.sign_ = -d.sign_;
        }
        double row_max = 0.0;
        for (int j = k; j < n; ++j) row_max = std::max(row_max, std::abs(d.lu_(k, j)));
        if (std::abs(d.lu_(k, k)) <= kPivotThreshold * row_max && !d.singular_col_)
            d.singular_col_ = k;
        if (d.lu_(k, k) == Complex{}) continue; // column already clear below
        for (int i = k + 1; i < n; ++i) {
            const Complex f = d.lu_(i, k) / d.lu_(k, k);
            d.lu_(i, k) = f;
            if (f == Complex{}) continue;
            for (int j = k + 1; j < n; ++j) d.lu_(i, j) -= f * d.lu_(k, j);
        }
    }
    return d;
}

Complex LuDecomposition::determinant() const {
    Complex det{static_cast<double>(sign_), 0.0};
    for (int i = 0; i < lu_.rows(); ++i) det *= lu_(i, i);
    return det;
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& rhs) const {
    if (singular())
        throw SingularMatrix("solve: matrix is singular (pivot column " +
                             std::to_string(*singular_col_) + ")");
    const int n = lu_.rows();
    if (rhs.rows() != n)
        throw DimensionMismatch("solve: right-hand side has wrong row count");
    ComplexMatrix x(n, rhs.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            x(i, j) = rhs(perm_[static_cast<std::size_t>(i)], j);
    // forward: unit lower triangle
    for (int i = 1; i < n; ++i)
        for (int k = 0; k < i; ++k) {
            const Complex f = lu_(i, k);
            if (f == Complex{}) continue;
            for (int j = 0; j < rhs.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    // backward: upper triangle
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) {
            const Complex f = lu_(i, k);
            if (f == Complex{}) continue;
            for (int j = 0; j < rhs.cols(); ++j) x(i, j) -= f * x(k, j);
        }
        for (int j = 0; j < rhs.cols(); ++j) x(i, j) /= lu_(i, i);
    }
    return x;
}

ComplexMatrix LuDecomposition::inverse() const {
    return solve(ComplexMatrix::identity(lu_.rows()));
}

Complex determinant(const ComplexMatrix& a) {
    return LuDecomposition::compute(a).determinant();
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return LuDecomposition::compute(a).inverse();
}

namespace {

struct Givens {
    double c;
    Complex s;
};

// Unitary [[c, s], [-conj(s), c]] with c real sending (f, g) to (r, 0).
Givens make_givens(Complex f, Complex g) {
    if (g == Complex{}) return {1.0, Complex{}};
    if (f == Complex{}) return {0.0, Complex{1.0, 0.0}};
    const double af = std::abs(f);
    const double ag = std::abs(g);
    const double denom = std::hypot(af, ag);
    return {af / denom, (f / af) * std::conj(g) / denom};
}

void hessenberg_in_place(ComplexMatrix& h) {
    const int n = h.rows();
    std::vector<Complex> v;
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = (x0 == Complex{}) ? Complex{1.0, 0.0} : x0 / std::abs(x0);
        v.assign(static_cast<std::size_t>(n - k - 1), Complex{});
        v[0] = x0 + phase * xnorm;
        for (int i = k + 2; i < n; ++i) v[static_cast<std::size_t>(i - k - 1)] = h(i, k);
        double vnorm2 = 0.0;
        for (const Complex& c : v) vnorm2 += std::norm(c);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // left: rows k+1..n-1
        for (int j = k; j < n; ++j) {
            Complex w{};
            for (int i = 0; i < n - k - 1; ++i)
                w += std::conj(v[static_cast<std::size_t>(i)]) * h(k + 1 + i, j);
            w *= beta;
            for (int i = 0; i < n - k - 1; ++i)
                h(k + 1 + i, j) -= v[static_cast<std::size_t>(i)] * w;
        }
        // right: columns k+1..n-1
        for (int i = 0; i < n; ++i) {
            Complex w{};
            for (int j = 0; j < n - k - 1; ++j)
                w += h(i, k + 1 + j) * v[static_cast<std::size_t>(j)];
            w *= beta;
            for (int j = 0; j < n - k - 1; ++j)
                h(i, k + 1 + j) -= w * std::conj(v[static_cast<std::size_t>(j)]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = Complex{};
    }
}

std::pair<Complex, Complex> eig_2x2(Complex a, Complex b, Complex c, Complex d) {
    const Complex tr = a + d;
    const Complex det = a * d - b * c;
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    const Complex cand1 = (tr + disc) * 0.5;
    const Complex cand2 = (tr - disc) * 0.5;
    const Complex big = (std::abs(cand1) >= std::abs(cand2)) ? cand1 : cand2;
    if (big == Complex{}) return {cand1, cand2};
    return {big, det / big};
}

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
    auto [m1, m2] = eig_2x2(a, b, c, d);
    return (std::abs(m1 - d) <= std::abs(m2 - d)) ? m1 : m2;
}

// One explicitly shifted QR sweep on the decoupled block [lo..hi].
void qr_step(ComplexMatrix& h, int lo, int hi, Complex sigma) {
    for (int i = lo; i <= hi; ++i) h(i, i) -= sigma;
    const int m = hi - lo;
    std::vector<Givens> rot(static_cast<std::size_t>(m));
    for (int k = lo; k < hi; ++k) {
        const Givens g = make_givens(h(k, k), h(k + 1, k));
        rot[static_cast<std::size_t>(k - lo)] = g;
        for (int j = k; j <= hi; ++j) {
            const Complex t1 = h(k, j);
            const Complex t2 = h(k + 1, j);
            h(k, j) = g.c * t1 + g.s * t2;
            h(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
        }
        h(k + 1, k) = Complex{};
    }
    for (int k = lo; k < hi; ++k) {
        const Givens g = rot[static_cast<std::size_t>(k - lo)];
        for (int i = lo; i <= hi; ++i) {
            const Complex t1 = h(i, k);
            const Complex t2 = h(i, k + 1);
            h(i, k) = g.c * t1 + std::conj(g.s) * t2;
            h(i, k + 1) = -g.s * t1 + g.c * t2;
        }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
}

} // namespace

std::vector<Complex> eigenvalues(ComplexMatrix a, double tol) {
    require_square(a, "eigenvalues");
    const int n = a.rows();
    if (n == 0) return {};
    ComplexMatrix h = std::move(a);
    hessenberg_in_place(h);
    const double scale = std::max(h.max_abs(), 1e-300);

    auto negligible = [&](int i) {
        double s = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
        if (s == 0.0) s = scale;
        return std::abs(h(i, i - 1)) <= tol * s;
    };

    std::vector<Complex> eigs;
    eigs.reserve(static_cast<std::size_t>(n));
    int hi = n - 1;
    long total_iter = 0;
    const long max_iter = 100L * n;
    int since_deflation = 0;

    while (hi >= 0) {
        if (hi == 0) {
            eigs.push_back(h(0, 0));
            --hi;
            continue;
        }
        if (negligible(hi)) {
            h(hi, hi - 1) = Complex{};
            eigs.push_back(h(hi, hi));
            --hi;
            since_deflation = 0;
            continue;
        }
        if (hi == 1 || negligible(hi - 1)) {
            auto [m1, m2] = eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi),
                                    h(hi, hi - 1), h(hi, hi));
            eigs.push_back(m1);
            eigs.push_back(m2);
            hi -= 2;
            since_deflation = 0;
            continue;
        }
        int lo = hi - 1;
        while (lo > 0 && !negligible(lo)) --lo;
        ++since_deflation;
        Complex sigma;
        if (since_deflation % 16 == 0)
            sigma = h(hi, hi) + Complex{0.75 * std::abs(h(hi, hi - 1)), 0.0};
        else
            sigma = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi),
                                    h(hi, hi - 1), h(hi, hi));
        qr_step(h, lo, hi, sigma);
        if (++total_iter > max_iter)
            throw NotConverged("eigenvalues: QR iteration limit reached");
    }
    return eigs;
}

} // namespace mixedop
