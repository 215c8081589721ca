#pragma once

#include <random>

#include "mixedop/operator.hpp"

namespace mixedop {

using Rng = std::mt19937_64;

/// Uniform over the centered square of half-width `scale`.
Complex random_complex(Rng& rng, double scale);

/// Every subset present, all coefficients random at `scale`.
MixedOperator random_operator(Rng& rng, int N, int M, int p, double scale = 1.0);

/// Each subset kept with probability `keep` (the draw happens for every
/// subset, so the stream stays aligned across instances).
MixedOperator random_sparse_operator(Rng& rng, int N, int M, int p, double keep,
                                     double scale = 1.0);

StaircaseFunction random_function(Rng& rng, int N, int M, int p, double scale = 1.0);

/// Dense random operator rescaled so norm_L lands in [lo, hi].
MixedOperator random_bounded(Rng& rng, int N, int M, int p, double lo, double hi);

/// I + B with norm_L(B) in [lo, hi]; hi < 1 keeps it invertible.
MixedOperator random_near_identity(Rng& rng, int N, int M, int p,
                                   double lo = 0.2, double hi = 0.5);

/// Elementary factor for alpha: I + <K>_alpha with random K (for the empty
/// subset: a multiplication by I + small random blocks). Not necessarily
/// invertible at large scales.
MixedOperator random_elementary(Rng& rng, int N, int M, int p,
                                const SubsetIndex& alpha, double scale = 0.8);

/// Like random_elementary but resampled (shrinking the scale if needed)
/// until the factor inverts cleanly.
MixedOperator random_invertible_elementary(Rng& rng, int N, int M, int p,
                                           const SubsetIndex& alpha,
                                           double scale = 0.8);

/// Product of invertible elementary factors in ascending subset order, one
/// per subset kept with probability `keep` (the empty factor is always
/// kept). Invertible by construction, arbitrarily far from the identity.
/// `scale` sets the kernel size of each factor before its own conditioning
/// gate; pass something smaller when the result will be composed further.
MixedOperator random_invertible(Rng& rng, int N, int M, int p, double keep = 0.7,
                                double scale = 0.8);

/// Every term's block is one random matrix repeated across all cells.
MixedOperator random_constant_kernel(Rng& rng, int N, int M, int p,
                                     double scale = 1.0);

} // namespace mixedop
