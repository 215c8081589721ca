#pragma once

#include "mixedop/operator.hpp"

namespace mixedop {

/// Re-express the same operator on the finer mesh 1/(p*factor) by
/// replicating each coefficient block across the q^d subcells it covers.
/// factor >= 1; factor == 1 returns an identical copy. The result acts
/// exactly like the input, and refinement commutes with composition and
/// linear combination.
MixedOperator refine_operator(const MixedOperator& a, int factor);

StaircaseFunction refine_function(const StaircaseFunction& u, int factor);

} // namespace mixedop
