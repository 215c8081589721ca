#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mixedop/errors.hpp"
#include "mixedop/determinant.hpp"
#include "mixedop/random_ops.hpp"

using namespace mixedop;

namespace {

MixedOperator two_term() {
    MixedOperator a(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 2.0));
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    return a;
}

MixedOperator single_integral(double value) {
    MixedOperator a = identity_operator(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, value));
    return a;
}

} // namespace

TEST_CASE("componentwise trace of the two-term example") {
    const CElement tau = trace(two_term());
    CHECK(std::abs(tau.at(SubsetIndex{}, 0) - Complex(2, 0)) < 1e-15);
    CHECK(std::abs(tau.at(SubsetIndex{1}, 0) - Complex(3, 0)) < 1e-15);
    CHECK(c_norm(tau) == doctest::Approx(3.0));
}

TEST_CASE("trace of an integral term is the weighted diagonal sum") {
    MixedOperator a(1, 1, 2);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 2, SubsetIndex{1});
    k.at(0, 0, 0, 0) = 1.0;
    k.at(0, 1, 0, 0) = 2.0;
    k.at(1, 0, 0, 0) = 3.0;
    k.at(1, 1, 0, 0) = 4.0;
    a.set_term(k);
    const CElement tau = trace(a);
    CHECK(std::abs(tau.at(SubsetIndex{1}, 0) - Complex(2.5, 0)) < 1e-15);
    CHECK(std::abs(tau.at(SubsetIndex{}, 0)) == 0.0);
}

TEST_CASE("determinant components of the two-term example") {
    const CElement pi = determinant(two_term());
    CHECK(std::abs(pi.at(SubsetIndex{}, 0) - Complex(2.0, 0)) < 1e-14);
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - Complex(2.5, 0)) < 1e-14);
}

TEST_CASE("determinant is multiplicative and order independent") {
    const MixedOperator a = two_term();
    const CElement pia = determinant(a);
    const CElement pisq = determinant(compose(a, a));
    CHECK(std::abs(pisq.at(SubsetIndex{}, 0) - Complex(4.0, 0)) < 1e-13);
    CHECK(std::abs(pisq.at(SubsetIndex{1}, 0) - Complex(6.25, 0)) < 1e-13);
    CHECK(c_equal(pisq, c_multiply(pia, pia), 1e-12));

    Rng rng(23);
    const MixedOperator x = random_near_identity(rng, 2, 2, 2);
    const MixedOperator y = random_invertible(rng, 2, 2, 2);
    CHECK(c_equal(determinant(compose(x, y)), determinant(compose(y, x)), 1e-10));
}

TEST_CASE("series determinant of a rank-one integral factor") {
    const CElement pi = det_fredholm(single_integral(3.0));
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - Complex(4.0, 0)) < 1e-14);
    CHECK(std::abs(pi.at(SubsetIndex{}, 0) - Complex(1.0, 0)) < 1e-15);
    // the order cap is the rank, so nmax=1 changes nothing here
    const CElement pi1 = det_fredholm(single_integral(3.0), 1);
    CHECK(std::abs(pi1.at(SubsetIndex{1}, 0) - Complex(4.0, 0)) < 1e-14);
}

TEST_CASE("series determinant matches the E field at mesh one half") {
    MixedOperator g = identity_operator(1, 1, 2);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 2, SubsetIndex{1});
    k.at(0, 0, 0, 0) = 1.0;
    k.at(0, 1, 0, 0) = 2.0;
    k.at(1, 0, 0, 0) = 3.0;
    k.at(1, 1, 0, 0) = 4.0;
    g.set_term(k);
    // det(I + (1/2) K) = 1 + (1/2) tr K + (1/4) det K = 1 + 2.5 - 0.5
    const CElement pi = det_fredholm(g);
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - Complex(3.0, 0)) < 1e-13);
    const std::vector<Complex> exact = det_elementary(build_E(g, SubsetIndex{1}));
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - exact[0]) < 1e-13);
}

TEST_CASE("series determinant rejects non-elementary shapes") {
    CHECK_THROWS_AS(det_fredholm(two_term()), std::invalid_argument);
    Rng rng(5);
    CHECK_THROWS_AS(det_fredholm(random_operator(rng, 2, 1, 1)),
                    std::invalid_argument);
}

TEST_CASE("series determinant stops at the work budget") {
    MixedOperator g = identity_operator(1, 1, 10);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 10, SubsetIndex{1});
    for (std::int64_t t = 0; t < 10; ++t)
        for (std::int64_t s = 0; s < 10; ++s) k.at(t, s, 0, 0) = 0.01;
    g.set_term(k);
    CHECK_THROWS_AS(det_fredholm(g, 10), BudgetExceeded);
    // low orders fit comfortably
    const CElement pi = det_fredholm(g, 2);
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - Complex(1.01, 0)) < 1e-12);
}

TEST_CASE("trace-moment series for small perturbations") {
    // det(1 + <3>) through the moment determinants: polynomial of degree 1
    const CElement ps = det_plemelj_smithies(
        scale(identity_operator(1, 1, 1), 0.0), 1e-12, -1);
    CHECK(std::abs(ps.at(SubsetIndex{}, 0) - Complex(1, 0)) < 1e-15);

    MixedOperator b(1, 1, 1);
    b.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    const CElement big = det_plemelj_smithies(b);
    CHECK(std::abs(big.at(SubsetIndex{1}, 0) - Complex(4.0, 0)) < 1e-12);

    // an explicit order cap above the polynomial degree cannot converge
    // for norms at or above one
    CHECK_THROWS_AS(det_plemelj_smithies(b, 1e-12, 5), NotConverged);

    MixedOperator small(1, 1, 1);
    small.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 0.5));
    const CElement ps_small = det_plemelj_smithies(small);
    CHECK(std::abs(ps_small.at(SubsetIndex{1}, 0) - Complex(1.5, 0)) < 1e-12);
}

TEST_CASE("log series determinant") {
    MixedOperator b(1, 1, 1);
    b.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 0.5));
    const CElement pi = det_log_series(b);
    CHECK(std::abs(pi.at(SubsetIndex{1}, 0) - Complex(1.5, 0)) < 1e-12);
    CHECK(std::abs(pi.at(SubsetIndex{}, 0) - Complex(1.0, 0)) < 1e-13);

    MixedOperator large(1, 1, 1);
    large.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 1.5));
    CHECK_THROWS_AS(det_log_series(large), NormTooLarge);
}

TEST_CASE("determinant of the exponential is the exponential of the trace") {
    const MixedOperator a = scale(two_term(), 0.2); // norm 1
    const CElement lhs = determinant(exp_operator(a, 1e-14));
    const CElement rhs = c_exp(trace(a));
    CHECK(c_equal(lhs, rhs, 1e-9));
    CHECK(std::abs(rhs.at(SubsetIndex{}, 0) - Complex(std::exp(0.4), 0)) < 1e-12);
    CHECK(std::abs(rhs.at(SubsetIndex{1}, 0) - Complex(std::exp(0.6), 0)) < 1e-12);
}

TEST_CASE("determinant components move continuously under tiny perturbations") {
    Rng rng(2026);
    const int dims[][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 2}, {2, 2, 1}};
    for (const auto& d : dims) {
        const int N = d[0], M = d[1], p = d[2];
        const MixedOperator a = random_near_identity(rng, N, M, p);
        const double inv_scale = norm_L(inverse(a));
        const MixedOperator b = random_bounded(rng, N, M, p, 0.5e-8, 1e-8);
        const double nb = norm_L(b);
        REQUIRE(nb <= 1e-6 / inv_scale);
        const CElement before = determinant(a);
        const CElement after = determinant(linear_combine(1.0, a, 1.0, b));
        for (const auto& [alpha, values] : before.comps) {
            const auto& moved = after.comps.at(alpha);
            REQUIRE(moved.size() == values.size());
            // the observed sensitivity stays a few orders below this ceiling
            for (std::size_t cell = 0; cell < values.size(); ++cell)
                CHECK(std::abs(moved[cell] - values[cell]) <= 1e4 * nb);
        }
    }
}

TEST_CASE("coefficient algebra basics") {
    Rng rng(9);
    const MixedOperator a = random_operator(rng, 2, 2, 2);
    const MixedOperator b = random_operator(rng, 2, 2, 2);
    const CElement ta = trace(a);
    const CElement tb = trace(b);

    // linearity
    const CElement lhs = trace(linear_combine(2.0, a, Complex(0, 1), b));
    const CElement rhs = c_combine(2.0, ta, Complex(0, 1), tb);
    CHECK(c_norm(c_combine(1.0, lhs, -1.0, rhs)) < 1e-12 * std::max(1.0, c_norm(lhs)));

    // cyclicity
    const CElement tab = trace(compose(a, b));
    const CElement tba = trace(compose(b, a));
    CHECK(c_norm(c_combine(1.0, tab, -1.0, tba)) < 1e-12 * std::max(1.0, c_norm(tab)));

    // bound with equality at the identity
    CHECK(c_norm(ta) <= 2.0 * norm_L(a) * (1.0 + 1e-13));
    const MixedOperator id = identity_operator(2, 2, 2);
    CHECK(c_norm(trace(id)) == doctest::Approx(2.0 * norm_L(id)).epsilon(1e-14));
}
