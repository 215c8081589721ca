#include <doctest.h>

#include <stdexcept>

#include "mixedop/errors.hpp"
#include "mixedop/factorization.hpp"
#include "mixedop/random_ops.hpp"

using namespace mixedop;

namespace {

MixedOperator two_term() {
    MixedOperator a(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 2.0));
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    return a;
}

} // namespace

TEST_CASE("two-term factorization, recomposition, inverse") {
    const MixedOperator a = two_term();
    const Factorization f = factorize(a);
    REQUIRE(f.factors.size() == 2);

    // multiplication part first: G = 2
    CHECK(f.factors[0].first == SubsetIndex{});
    CHECK(std::abs(f.factors[0].second.term(SubsetIndex{})->at(0, 0, 0, 0) -
                   Complex(2, 0)) < 1e-15);

    // then I + <3/2>
    CHECK(f.factors[1].first == SubsetIndex{1});
    const MixedOperator& g1 = f.factors[1].second;
    CHECK(std::abs(g1.term(SubsetIndex{})->at(0, 0, 0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(g1.term(SubsetIndex{1})->at(0, 0, 0, 0) - Complex(1.5, 0)) < 1e-15);

    CHECK(operator_equal(factor_product(f), a, 1e-14));

    // (2 + <3>)^{-1} = 0.5 - <0.3>
    const MixedOperator ainv = inverse(a);
    CHECK(std::abs(ainv.term(SubsetIndex{})->at(0, 0, 0, 0) - Complex(0.5, 0)) < 1e-14);
    CHECK(std::abs(ainv.term(SubsetIndex{1})->at(0, 0, 0, 0) - Complex(-0.3, 0)) < 1e-14);
    CHECK(operator_equal(compose(a, ainv), identity_operator(1, 1, 1), 1e-14));
    CHECK(operator_equal(compose(ainv, a), identity_operator(1, 1, 1), 1e-14));
}

TEST_CASE("E field of an integral factor at mesh one half") {
    MixedOperator g = identity_operator(1, 1, 2);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 2, SubsetIndex{1});
    k.at(0, 0, 0, 0) = 1.0;
    k.at(0, 1, 0, 0) = 2.0;
    k.at(1, 0, 0, 0) = 3.0;
    k.at(1, 1, 0, 0) = 4.0;
    g.set_term(k);

    const EMatrixField field = build_E(g, SubsetIndex{1});
    REQUIRE(field.mats.size() == 1); // complement of {1} has a single cell
    REQUIRE(field.r == 2);
    const ComplexMatrix& e = field.mats[0];
    CHECK(std::abs(e(0, 0) - Complex(1.5, 0)) < 1e-15);
    CHECK(std::abs(e(0, 1) - Complex(1.0, 0)) < 1e-15);
    CHECK(std::abs(e(1, 0) - Complex(1.5, 0)) < 1e-15);
    CHECK(std::abs(e(1, 1) - Complex(3.0, 0)) < 1e-15);

    const MixedOperator ginv = elementary_inverse(g, SubsetIndex{1});
    CHECK(operator_equal(compose(g, ginv), identity_operator(1, 1, 2), 1e-13));
    CHECK(operator_equal(compose(ginv, g), identity_operator(1, 1, 2), 1e-13));
}

TEST_CASE("build_E rejects non-elementary input") {
    Rng rng(3);
    const MixedOperator a = random_operator(rng, 2, 1, 1);
    CHECK_THROWS_AS(build_E(a, SubsetIndex{1}), std::invalid_argument);

    // empty-subset part must be the identity when alpha is nonempty
    MixedOperator g = identity_operator(1, 1, 1);
    g.ensure_term(SubsetIndex{1});
    g.ensure_term(SubsetIndex{}).coeffs[0] = 2.0;
    CHECK_THROWS_AS(build_E(g, SubsetIndex{1}), std::invalid_argument);
}

TEST_CASE("singular multiplication part is reported with its cell") {
    MixedOperator a(1, 1, 2);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 2, SubsetIndex{});
    k.at(0, 0, 0, 0) = 1.0; // cell 1 block stays zero
    a.set_term(k);
    CHECK_THROWS_AS(factorize(a), SingularBlock);
    try {
        factorize(a);
    } catch (const SingularBlock& e) {
        CHECK(std::string(e.what()).find("(1)") != std::string::npos);
    }
}

TEST_CASE("singular E is reported with subset and cell") {
    MixedOperator g = identity_operator(1, 1, 1);
    g.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, -1.0));
    CHECK_THROWS_AS(elementary_inverse(g, SubsetIndex{1}), SingularE);
    try {
        elementary_inverse(g, SubsetIndex{1});
    } catch (const SingularE& e) {
        CHECK(std::string(e.what()).find("{1}") != std::string::npos);
    }
}

TEST_CASE("near-singular peel fails the residue check") {
    // E = I + K = [[1,1],[1,1+1e-11]] squeaks past the pivot test, but the
    // huge entries of E^{-1} wreck the cancellation in the peel remainder.
    MixedOperator a = identity_operator(1, 2, 1);
    StaircaseKernel k = StaircaseKernel::zeros(1, 2, 1, SubsetIndex{1});
    k.at(0, 0, 0, 1) = 1.0;
    k.at(0, 0, 1, 0) = 1.0;
    k.at(0, 0, 1, 1) = 1e-11;
    a.set_term(std::move(k));
    CHECK_THROWS_AS(factorize(a), ResidueNotIdentity);
}

TEST_CASE("two factors over one subset collapse back into one") {
    Rng rng(44);
    const SubsetIndex alpha{2};
    const MixedOperator g1 = random_invertible_elementary(rng, 2, 2, 2, alpha);
    const MixedOperator g2 = random_invertible_elementary(rng, 2, 2, 2, alpha);
    const MixedOperator prod = compose(g1, g2);
    const Factorization f = factorize(prod);
    const MixedOperator ident = identity_operator(2, 2, 2);
    for (const auto& [beta, g] : f.factors) {
        if (beta == alpha) continue;
        CHECK(operator_equal(g, ident, 1e-12));
    }
    CHECK(operator_equal(factor_product(f), prod, 1e-10));
}

TEST_CASE("one peel step leaves non-supersets byte-identical") {
    // The peel of alpha assumes the multiplication part is already the
    // identity (the empty subset goes first), so build the input that way.
    Rng rng(45);
    const SubsetIndex alpha{1};
    MixedOperator a = identity_operator(2, 2, 2);
    const MixedOperator src = random_invertible_elementary(rng, 2, 2, 2, alpha);
    a.set_term(*src.term(alpha));
    const MixedOperator filler = random_operator(rng, 2, 2, 2);
    a.set_term(*filler.term(SubsetIndex{2}));
    a.set_term(*filler.term(SubsetIndex{1, 2}));

    MixedOperator g = identity_operator(2, 2, 2);
    g.set_term(*a.term(alpha));
    const MixedOperator current = compose(elementary_inverse(g, alpha), a);

    // the alpha term is eliminated ...
    if (const StaircaseKernel* k = current.term(alpha))
        CHECK(k->max_abs() < 1e-10 * (1.0 + norm_L(a)));
    // ... and terms not containing alpha come through untouched
    for (const SubsetIndex& beta : {SubsetIndex{}, SubsetIndex{2}}) {
        const StaircaseKernel* before = a.term(beta);
        const StaircaseKernel* after = current.term(beta);
        REQUIRE(before != nullptr);
        REQUIRE(after != nullptr);
        CHECK(after->coeffs == before->coeffs);
    }
}

TEST_CASE("ascending products are recovered factor by factor") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const int N = 2, M = 2, p = 2;
        std::vector<MixedOperator> made;
        MixedOperator prod;
        bool first = true;
        for (const SubsetIndex& beta : subsets_ascending(N)) {
            MixedOperator g = random_invertible_elementary(rng, N, M, p, beta, 0.5);
            prod = first ? g : compose(prod, g);
            first = false;
            made.push_back(std::move(g));
        }
        const Factorization back = factorize(prod);
        REQUIRE(back.factors.size() == made.size());
        for (std::size_t i = 0; i < made.size(); ++i) {
            CHECK(operator_equal(back.factors[i].second, made[i],
                                 1e-10 * (1.0 + norm_L(made[i]))));
        }
    }
}
