#include "mixedop/subset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mixedop {

SubsetIndex::SubsetIndex(std::initializer_list<int> dims)
    : SubsetIndex(from_dims(std::vector<int>(dims))) {}

SubsetIndex SubsetIndex::from_dims(std::vector<int> dims) {
    std::sort(dims.begin(), dims.end());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1)
            throw std::invalid_argument("subset dimensions must be >= 1");
        if (i > 0 && dims[i] == dims[i - 1])
            throw std::invalid_argument("subset dimensions must be distinct");
    }
    SubsetIndex s;
    s.dims_ = std::move(dims);
    return s;
}

SubsetIndex SubsetIndex::full(int n) {
    SubsetIndex s;
    s.dims_.resize(static_cast<std::size_t>(n));
    std::iota(s.dims_.begin(), s.dims_.end(), 1);
    return s;
}

bool SubsetIndex::contains(int dim) const {
    return std::binary_search(dims_.begin(), dims_.end(), dim);
}

SubsetIndex SubsetIndex::complement(int n) const {
    SubsetIndex s;
    for (int d = 1; d <= n; ++d)
        if (!contains(d)) s.dims_.push_back(d);
    return s;
}

bool SubsetIndex::disjoint_with(const SubsetIndex& other) const {
    return set_intersection(*this, other).empty();
}

bool SubsetIndex::subset_of(const SubsetIndex& other) const {
    return std::includes(other.dims_.begin(), other.dims_.end(),
                         dims_.begin(), dims_.end());
}

bool SubsetIndex::operator<(const SubsetIndex& other) const {
    if (dims_.size() != other.dims_.size())
        return dims_.size() < other.dims_.size();
    return dims_ < other.dims_;
}

std::string SubsetIndex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) os << ',';
        os << dims_[i];
    }
    os << '}';
    return os.str();
}

SubsetIndex set_union(const SubsetIndex& a, const SubsetIndex& b) {
    std::vector<int> out;
    std::set_union(a.dims().begin(), a.dims().end(),
                   b.dims().begin(), b.dims().end(), std::back_inserter(out));
    return SubsetIndex::from_dims(std::move(out));
}

SubsetIndex set_intersection(const SubsetIndex& a, const SubsetIndex& b) {
    std::vector<int> out;
    std::set_intersection(a.dims().begin(), a.dims().end(),
                          b.dims().begin(), b.dims().end(),
                          std::back_inserter(out));
    return SubsetIndex::from_dims(std::move(out));
}

SubsetIndex set_difference(const SubsetIndex& a, const SubsetIndex& b) {
    std::vector<int> out;
    std::set_difference(a.dims().begin(), a.dims().end(),
                        b.dims().begin(), b.dims().end(),
                        std::back_inserter(out));
    return SubsetIndex::from_dims(std::move(out));
}

std::vector<SubsetIndex> subsets_ascending(int n) {
    if (n < 1)
        throw std::invalid_argument("subsets_ascending requires n >= 1");
    std::vector<SubsetIndex> out;
    out.reserve(std::size_t{1} << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> dims;
        for (int d = 1; d <= n; ++d)
            if (mask & (1u << (d - 1))) dims.push_back(d);
        out.push_back(SubsetIndex::from_dims(std::move(dims)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mixedop
