#include <doctest.h>

#include <cmath>

#include "mixedop/errors.hpp"
#include "mixedop/operator.hpp"
#include "mixedop/random_ops.hpp"
#include "mixedop/refine.hpp"

using namespace mixedop;

namespace {

// the two-term scalar example used throughout: 2 u(t) + 3 integral of u
MixedOperator two_term() {
    MixedOperator a(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 2.0));
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    return a;
}

StaircaseKernel matrix2(int N, SubsetIndex alpha, double k00, double k01,
                        double k10, double k11) {
    StaircaseKernel k = StaircaseKernel::zeros(N, 1, 2, alpha);
    k.at(0, 0, 0, 0) = k00;
    k.at(0, 1, 0, 0) = k01;
    k.at(1, 0, 0, 0) = k10;
    k.at(1, 1, 0, 0) = k11;
    return k;
}

} // namespace

TEST_CASE("two-term action and norm") {
    const MixedOperator a = two_term();
    const StaircaseFunction u = StaircaseFunction::constant(1, 1, 1, 1.0);
    const StaircaseFunction v = apply(a, u);
    CHECK(std::abs(v.at(0, 0) - Complex(5.0, 0.0)) < 1e-15);
    CHECK(norm_L(a) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("integral term at mesh one half") {
    MixedOperator a(1, 1, 2);
    a.set_term(matrix2(1, SubsetIndex{1}, 1, 2, 3, 4));
    StaircaseFunction u = StaircaseFunction::zeros(1, 1, 2);
    u.values[0] = 1.0;
    u.values[1] = 2.0;
    const StaircaseFunction v = apply(a, u);
    // (Au)(t) = (1/2) sum_s K[t,s] u(s)
    CHECK(std::abs(v.at(0, 0) - Complex(2.5, 0.0)) < 1e-15);
    CHECK(std::abs(v.at(1, 0) - Complex(5.5, 0.0)) < 1e-15);
    // largest block row sum over all cell pairs; blocks are 1x1 here
    CHECK(norm_L(a) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("composition contracts coinciding dimensions with weight h") {
    MixedOperator a(1, 1, 2), b(1, 1, 2);
    a.set_term(matrix2(1, SubsetIndex{1}, 1, 2, 3, 4));
    b.set_term(matrix2(1, SubsetIndex{1}, 5, 6, 7, 8));
    const MixedOperator c = compose(a, b);
    REQUIRE(c.terms.size() == 1);
    const StaircaseKernel& k = *c.term(SubsetIndex{1});
    CHECK(std::abs(k.at(0, 0, 0, 0) - Complex(9.5, 0.0)) < 1e-14);
    CHECK(std::abs(k.at(0, 1, 0, 0) - Complex(11.0, 0.0)) < 1e-14);
    CHECK(std::abs(k.at(1, 0, 0, 0) - Complex(21.5, 0.0)) < 1e-14);
    CHECK(std::abs(k.at(1, 1, 0, 0) - Complex(25.0, 0.0)) < 1e-14);
}

TEST_CASE("multiplication terms compose cellwise") {
    const MixedOperator a = two_term();
    const MixedOperator sq = compose(a, a);
    // (2 + <3>)^2 = 4 + <6 + 6 + 9>
    CHECK(std::abs(sq.term(SubsetIndex{})->at(0, 0, 0, 0) - Complex(4, 0)) < 1e-14);
    CHECK(std::abs(sq.term(SubsetIndex{1})->at(0, 0, 0, 0) - Complex(21, 0)) < 1e-14);
}

TEST_CASE("identity is neutral for composition") {
    Rng rng(7);
    const MixedOperator a = random_operator(rng, 2, 2, 2);
    const MixedOperator id = identity_operator(2, 2, 2);
    CHECK(operator_equal(compose(a, id), a, 1e-14));
    CHECK(operator_equal(compose(id, a), a, 1e-14));
}

TEST_CASE("mixed-dimension composition against the brute-force matrix") {
    // spot check on a nontrivial shape; the full property lives in the
    // invariant suites
    Rng rng(11);
    const MixedOperator a = random_sparse_operator(rng, 2, 1, 2, 0.8);
    const MixedOperator b = random_sparse_operator(rng, 2, 1, 2, 0.8);
    const MixedOperator ab = compose(a, b);
    const StaircaseFunction u = random_function(rng, 2, 1, 2);
    const StaircaseFunction lhs = apply(ab, u);
    const StaircaseFunction rhs = apply(a, apply(b, u));
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
        CHECK(std::abs(lhs.values[i] - rhs.values[i]) < 1e-13);
}

TEST_CASE("dimension mismatches are rejected") {
    const MixedOperator a = two_term();
    const StaircaseFunction u = StaircaseFunction::constant(1, 2, 1, 1.0);
    CHECK_THROWS_AS(apply(a, u), DimensionMismatch);
    MixedOperator b(2, 1, 1);
    CHECK_THROWS_AS(compose(a, b), DimensionMismatch);
    CHECK_THROWS_AS(linear_combine(1.0, a, 1.0, b), DimensionMismatch);
}

TEST_CASE("exponential of a multiplication term") {
    MixedOperator a(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 0.7));
    const MixedOperator e = exp_operator(a, 1e-14);
    CHECK(std::abs(e.term(SubsetIndex{})->at(0, 0, 0, 0) -
                   Complex(std::exp(0.7), 0.0)) < 1e-13);
    const MixedOperator zero = zero_operator(2, 1, 2);
    CHECK(operator_equal(exp_operator(zero, 1e-14),
                         identity_operator(2, 1, 2), 1e-15));
}

TEST_CASE("refinement composes with exactly equal coefficients") {
    Rng rng(9);
    const MixedOperator a = random_operator(rng, 2, 2, 1);
    const MixedOperator once = refine_operator(a, 6);
    const MixedOperator twice = refine_operator(refine_operator(a, 2), 3);
    REQUIRE(twice.p == once.p);
    for (const auto& [alpha, k] : once.terms) {
        const StaircaseKernel* other = twice.term(alpha);
        REQUIRE(other != nullptr);
        CHECK(other->coeffs == k.coeffs);
    }
}

TEST_CASE("refinement preserves the action and the norm") {
    const MixedOperator a = two_term();
    const MixedOperator fine = refine_operator(a, 2);
    CHECK(fine.p == 2);
    CHECK(norm_L(fine) == doctest::Approx(5.0).epsilon(1e-14));
    StaircaseFunction u = StaircaseFunction::zeros(1, 1, 2);
    u.values[0] = 1.0;
    u.values[1] = 3.0;
    // A acts on the coarse average: 2 u + 3 * mean(u)
    const StaircaseFunction v = apply(fine, u);
    CHECK(std::abs(v.at(0, 0) - Complex(2.0 + 6.0, 0.0)) < 1e-14);
    CHECK(std::abs(v.at(1, 0) - Complex(6.0 + 6.0, 0.0)) < 1e-14);

    CHECK_THROWS_AS(refine_operator(a, 0), std::invalid_argument);
}
