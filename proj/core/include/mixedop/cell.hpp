#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixedop/subset.hpp"

namespace mixedop {

/// A grid cell of the uniform partition of [0,1)^N restricted to the
/// dimensions in `subset`. Coordinate t_i denotes [t_i/p, (t_i+1)/p)
/// along dimension i; coords are listed in increasing dimension order.
struct CellIndex {
    SubsetIndex subset;
    std::vector<int> coords;

    bool operator==(const CellIndex& other) const {
        return subset == other.subset && coords == other.coords;
    }

    std::string to_string() const;
};

/// Assemble a cell over the disjoint union of the two subsets; coordinates
/// keep increasing dimension order. Commutative and associative.
CellIndex diamond_merge(const CellIndex& x, const CellIndex& y);

/// Extract the coordinates of `t` along the dimensions in `beta` (beta must
/// be contained in t.subset).
CellIndex restrict_to(const CellIndex& t, const SubsetIndex& beta);

/// p^card, as a 64-bit count of cells.
std::int64_t cell_count(int card, int p);

/// Mixed-radix flattening, first listed dimension most significant.
std::int64_t flatten_cell(const CellIndex& cell, int p);
CellIndex unflatten_cell(const SubsetIndex& subset, std::int64_t flat, int p);

/// For every flat cell over `whole`, the flat index of its restriction to
/// `part`. part must be contained in whole.
std::vector<std::int64_t> restriction_table(const SubsetIndex& whole,
                                            const SubsetIndex& part, int p);

/// Flat-index merge of cells over two disjoint subsets: entry
/// [a_flat * p^|b| + b_flat] is the flat index over union(a,b).
std::vector<std::int64_t> merge_table(const SubsetIndex& a,
                                      const SubsetIndex& b, int p);

} // namespace mixedop
