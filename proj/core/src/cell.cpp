#include "mixedop/cell.hpp"

#include <algorithm>
#include <sstream>

#include "mixedop/errors.hpp"

namespace mixedop {

std::string CellIndex::to_string() const {
    std::ostringstream os;
    os << subset.to_string() << ":(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ')';
    return os.str();
}

CellIndex diamond_merge(const CellIndex& x, const CellIndex& y) {
    if (!x.subset.disjoint_with(y.subset))
        throw OverlappingSubsets("diamond_merge: subsets " + x.subset.to_string() +
                                 " and " + y.subset.to_string() + " overlap");
    CellIndex out;
    out.subset = set_union(x.subset, y.subset);
    out.coords.reserve(out.subset.dims().size());
    std::size_t ix = 0, iy = 0;
    for (int d : out.subset.dims()) {
        if (ix < x.subset.dims().size() && x.subset.dims()[ix] == d)
            out.coords.push_back(x.coords[ix++]);
        else
            out.coords.push_back(y.coords[iy++]);
    }
    return out;
}

CellIndex restrict_to(const CellIndex& t, const SubsetIndex& beta) {
    if (!beta.subset_of(t.subset))
        throw NotASubset("restrict_to: " + beta.to_string() +
                         " is not contained in " + t.subset.to_string());
    CellIndex out;
    out.subset = beta;
    out.coords.reserve(beta.dims().size());
    std::size_t it = 0;
    for (int d : beta.dims()) {
        while (t.subset.dims()[it] != d) ++it;
        out.coords.push_back(t.coords[it]);
    }
    return out;
}

std::int64_t cell_count(int card, int p) {
    std::int64_t n = 1;
    for (int i = 0; i < card; ++i) n *= p;
    return n;
}

std::int64_t flatten_cell(const CellIndex& cell, int p) {
    std::int64_t f = 0;
    for (int c : cell.coords) f = f * p + c;
    return f;
}

CellIndex unflatten_cell(const SubsetIndex& subset, std::int64_t flat, int p) {
    CellIndex out;
    out.subset = subset;
    out.coords.assign(subset.dims().size(), 0);
    for (std::size_t i = subset.dims().size(); i-- > 0;) {
        out.coords[i] = static_cast<int>(flat % p);
        flat /= p;
    }
    return out;
}

std::vector<std::int64_t> restriction_table(const SubsetIndex& whole,
                                            const SubsetIndex& part, int p) {
    if (!part.subset_of(whole))
        throw NotASubset("restriction_table: " + part.to_string() +
                         " is not contained in " + whole.to_string());
    // position of each part dimension inside whole's dims
    std::vector<int> pos;
    pos.reserve(part.dims().size());
    for (int d : part.dims()) {
        auto it = std::lower_bound(whole.dims().begin(), whole.dims().end(), d);
        pos.push_back(static_cast<int>(it - whole.dims().begin()));
    }
    const std::int64_t n = cell_count(whole.size(), p);
    std::vector<std::int64_t> table(static_cast<std::size_t>(n));
    for (std::int64_t f = 0; f < n; ++f) {
        CellIndex cell = unflatten_cell(whole, f, p);
        std::int64_t sub = 0;
        for (int q : pos) sub = sub * p + cell.coords[q];
        table[static_cast<std::size_t>(f)] = sub;
    }
    return table;
}

std::vector<std::int64_t> merge_table(const SubsetIndex& a,
                                      const SubsetIndex& b, int p) {
    if (!a.disjoint_with(b))
        throw OverlappingSubsets("merge_table: subsets overlap");
    const SubsetIndex uni = set_union(a, b);
    // For each merged position, whether it comes from a (and which slot).
    std::vector<std::pair<bool, int>> source;
    source.reserve(uni.dims().size());
    {
        std::size_t ia = 0, ib = 0;
        for (int d : uni.dims()) {
            if (ia < a.dims().size() && a.dims()[ia] == d)
                source.emplace_back(true, static_cast<int>(ia++));
            else
                source.emplace_back(false, static_cast<int>(ib++));
        }
    }
    const std::int64_t na = cell_count(a.size(), p);
    const std::int64_t nb = cell_count(b.size(), p);
    std::vector<std::int64_t> table(static_cast<std::size_t>(na * nb));
    std::vector<int> ca(a.dims().size()), cb(b.dims().size());
    for (std::int64_t fa = 0; fa < na; ++fa) {
        {
            std::int64_t r = fa;
            for (std::size_t i = ca.size(); i-- > 0;) { ca[i] = static_cast<int>(r % p); r /= p; }
        }
        for (std::int64_t fb = 0; fb < nb; ++fb) {
            std::int64_t r = fb;
            for (std::size_t i = cb.size(); i-- > 0;) { cb[i] = static_cast<int>(r % p); r /= p; }
            std::int64_t merged = 0;
            for (auto [from_a, slot] : source)
                merged = merged * p + (from_a ? ca[slot] : cb[slot]);
            table[static_cast<std::size_t>(fa * nb + fb)] = merged;
        }
    }
    return table;
}

} // namespace mixedop
