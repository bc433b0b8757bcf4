#pragma once

#include <string>
#include <vector>

#include "kmfold/autgroup.hpp"

namespace kmfold {

struct FoldResult {
    IMat folded;       // s x s, rows/columns indexed by orbit (ordered by minimum)
    IVec t_values;     // t_i per orbit representative
    OrbitData orbits;
    Recognition recognized;
};

FoldResult fold(const IMat& m, const Perm& tau);

// Primitive dual marks of the folded matrix indexed by orbit; the degenerate
// one-node zero fold gets the single entry 1.
IVec folded_dual_marks(const FoldResult& f);

}  // namespace kmfold
