#pragma once

#include <stdexcept>
#include <string>

namespace mixedop {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// diamond_merge called with non-disjoint subsets.
class OverlappingSubsets : public Error {
public:
    using Error::Error;
};

/// restrict_to called with a target that is not contained in the source subset.
class NotASubset : public Error {
public:
    using Error::Error;
};

/// Operands disagree in N, M or p.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Operation requires a non-empty integration subset.
class EmptySubset : public Error {
public:
    using Error::Error;
};

/// A multiplication block (the term over the empty subset) is singular at some cell.
class SingularBlock : public Error {
public:
    SingularBlock(const std::string& msg, std::string cell)
        : Error(msg), cell_text(std::move(cell)) {}
    std::string cell_text;
};

/// The E matrix of an elementary factor is singular at some complement cell.
class SingularE : public Error {
public:
    SingularE(const std::string& msg, std::string alpha, std::string cell)
        : Error(msg), alpha_text(std::move(alpha)), cell_text(std::move(cell)) {}
    std::string alpha_text;
    std::string cell_text;
};

/// The peel-off residue failed the identity check; internal consistency failure.
class ResidueNotIdentity : public Error {
public:
    using Error::Error;
};

/// A series or summation would exceed its configured work cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An iterative method has no applicable convergence guard for this input.
class NotConverged : public Error {
public:
    using Error::Error;
};

/// Series method requires norm below one.
class NormTooLarge : public Error {
public:
    using Error::Error;
};

/// Dense matrix is singular (LU pivot below threshold).
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Oracle matrix dimension exceeds the configured cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// A document failed schema validation on read.
class MalformedDocument : public Error {
public:
    using Error::Error;
};

} // namespace mixedop
