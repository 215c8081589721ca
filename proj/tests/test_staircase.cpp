#include <doctest.h>

#include <stdexcept>

#include "mixedop/cell.hpp"
#include "mixedop/subset.hpp"

using namespace mixedop;

TEST_CASE("subset canonical form and validation") {
    CHECK(SubsetIndex{}.empty());
    CHECK(SubsetIndex{1, 3}.size() == 2);
    CHECK(SubsetIndex::from_dims({3, 1}) == SubsetIndex{1, 3});
    CHECK_THROWS_AS(SubsetIndex::from_dims({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetIndex::from_dims({0}), std::invalid_argument);
    CHECK(SubsetIndex{1, 3}.to_string() == "{1,3}");
    CHECK(SubsetIndex{}.to_string() == "{}");
}

TEST_CASE("subset relations") {
    const SubsetIndex a{1, 2};
    const SubsetIndex b{2, 3};
    CHECK(set_union(a, b) == SubsetIndex{1, 2, 3});
    CHECK(set_intersection(a, b) == SubsetIndex{2});
    CHECK(set_difference(a, b) == SubsetIndex{1});
    CHECK(a.complement(3) == SubsetIndex{3});
    CHECK(SubsetIndex{}.complement(2) == SubsetIndex{1, 2});
    CHECK(SubsetIndex{1}.subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK(SubsetIndex{1}.disjoint_with(SubsetIndex{2, 3}));
    CHECK_FALSE(a.disjoint_with(b));
}

TEST_CASE("ascending enumeration is by size then lexicographic") {
    const std::vector<SubsetIndex> subs = subsets_ascending(2);
    REQUIRE(subs.size() == 4);
    CHECK(subs[0] == SubsetIndex{});
    CHECK(subs[1] == SubsetIndex{1});
    CHECK(subs[2] == SubsetIndex{2});
    CHECK(subs[3] == SubsetIndex{1, 2});

    const std::vector<SubsetIndex> three = subsets_ascending(3);
    REQUIRE(three.size() == 8);
    CHECK(three[4] == SubsetIndex{1, 2});
    CHECK(three[5] == SubsetIndex{1, 3});
    CHECK(three[6] == SubsetIndex{2, 3});
    CHECK(three[7] == SubsetIndex::full(3));

    // the factorization order is exactly operator<
    for (std::size_t i = 1; i < three.size(); ++i) CHECK(three[i - 1] < three[i]);
}

TEST_CASE("cell flattening round trip") {
    const SubsetIndex alpha{1, 3};
    const int p = 3;
    CHECK(cell_count(2, 3) == 9);
    for (std::int64_t flat = 0; flat < 9; ++flat) {
        const CellIndex c = unflatten_cell(alpha, flat, p);
        CHECK(c.subset == alpha);
        CHECK(flatten_cell(c, p) == flat);
    }
    // first listed dimension most significant
    const CellIndex c = unflatten_cell(alpha, 7, p);
    CHECK(c.coords == std::vector<int>{2, 1});
}

TEST_CASE("diamond merge keeps dimension order") {
    CellIndex x{SubsetIndex{2}, {4}};
    CellIndex y{SubsetIndex{1, 3}, {7, 9}};
    const CellIndex m = diamond_merge(x, y);
    CHECK(m.subset == SubsetIndex{1, 2, 3});
    CHECK(m.coords == std::vector<int>{7, 4, 9});
    CHECK(diamond_merge(y, x) == m);
    CHECK(restrict_to(m, SubsetIndex{2}) == x);
    CHECK(restrict_to(m, SubsetIndex{1, 3}) == y);
}

TEST_CASE("restriction and merge tables agree with the direct route") {
    const SubsetIndex whole{1, 2, 3};
    const SubsetIndex part{1, 3};
    const int p = 2;
    const std::vector<std::int64_t> table = restriction_table(whole, part, p);
    REQUIRE(table.size() == 8);
    for (std::int64_t flat = 0; flat < 8; ++flat) {
        const CellIndex c = unflatten_cell(whole, flat, p);
        CHECK(table[flat] == flatten_cell(restrict_to(c, part), p));
    }

    const SubsetIndex a{2};
    const SubsetIndex b{1, 3};
    const std::vector<std::int64_t> mt = merge_table(a, b, p);
    REQUIRE(mt.size() == 8);
    for (std::int64_t fa = 0; fa < 2; ++fa)
        for (std::int64_t fb = 0; fb < 4; ++fb) {
            const CellIndex merged = diamond_merge(unflatten_cell(a, fa, p),
                                                   unflatten_cell(b, fb, p));
            CHECK(mt[fa * 4 + fb] == flatten_cell(merged, p));
        }
}
