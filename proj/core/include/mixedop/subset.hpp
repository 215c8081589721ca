#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace mixedop {

/// A subset of the dimension indices {1,..,N}, kept strictly increasing.
/// The empty subset and the full subset are both valid values.
class SubsetIndex {
public:
    SubsetIndex() = default;
    SubsetIndex(std::initializer_list<int> dims);

    /// Validates and sorts into canonical form; throws std::invalid_argument
    /// on duplicates or non-positive entries.
    static SubsetIndex from_dims(std::vector<int> dims);
    static SubsetIndex full(int n);

    int size() const { return static_cast<int>(dims_.size()); }
    bool empty() const { return dims_.empty(); }
    bool contains(int dim) const;
    const std::vector<int>& dims() const { return dims_; }

    /// Complement within {1,..,n}.
    SubsetIndex complement(int n) const;
    bool disjoint_with(const SubsetIndex& other) const;
    bool subset_of(const SubsetIndex& other) const;

    bool operator==(const SubsetIndex& other) const { return dims_ == other.dims_; }
    bool operator!=(const SubsetIndex& other) const { return dims_ != other.dims_; }
    /// Orders by cardinality first, then lexicographically on the dims.
    /// This is the ascending order used by the factorization.
    bool operator<(const SubsetIndex& other) const;

    std::string to_string() const;

private:
    std::vector<int> dims_;
};

SubsetIndex set_union(const SubsetIndex& a, const SubsetIndex& b);
SubsetIndex set_intersection(const SubsetIndex& a, const SubsetIndex& b);
SubsetIndex set_difference(const SubsetIndex& a, const SubsetIndex& b);

/// All 2^n subsets of {1,..,n} ordered by increasing size, ties broken
/// lexicographically; starts with the empty set and ends with the full set.
std::vector<SubsetIndex> subsets_ascending(int n);

} // namespace mixedop
