#pragma once

#include <optional>

#include "mixedop/determinant.hpp"

namespace mixedop {

/// (lambda I - a)^{-1} through the factorization. Propagates SingularBlock /
/// SingularE / ResidueNotIdentity when lambda belongs to (or crowds) the
/// spectrum.
MixedOperator resolvent(const MixedOperator& a, Complex lambda);

enum class ComponentStatus {
    Computed,       // determinant field evaluated, factor inverted
    SingularFactor, // determinant field evaluated, factor not invertible
    Undefined       // unreachable: an earlier factor was singular
};

/// One subset's worth of evidence at one grid point: the smallest |pi_alpha|
/// over the complement cells and where it was attained.
struct ComponentRecord {
    SubsetIndex alpha;
    ComponentStatus status = ComponentStatus::Undefined;
    double min_abs_pi = 0.0;
    CellIndex argmin_cell;
    bool flagged = false;
};

struct SpectrumPoint {
    Complex lambda;
    double threshold = 0.0; // the value actually used at this point
    std::vector<ComponentRecord> components; // ascending subset order
};

/// One flagged hit: which lambda, which subset, and the complement cell where
/// the determinant minimum (or the singularity) was seen.
struct FlaggedHit {
    Complex lambda;
    SubsetIndex alpha;
    CellIndex cell;
};

struct SpectrumReport {
    int N = 0;
    int M = 1;
    int p = 1;
    std::vector<SpectrumPoint> points;
    std::vector<FlaggedHit> flagged; // scan order
};

/// Scan lambda over `grid`: factorize lambda I - a subset by subset,
/// recording each component's determinant minimum. A component is flagged
/// when that minimum is at or below the threshold, or when its factor fails
/// to invert; components past a singular factor stay Undefined. Without an
/// explicit threshold each point uses 1e-8 * (1 + |lambda| + norm_L(a)).
SpectrumReport spectrum_scan(const MixedOperator& a,
                             const std::vector<Complex>& grid,
                             std::optional<double> threshold = std::nullopt);

} // namespace mixedop
