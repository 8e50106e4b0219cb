#pragma once

// Exact dense linear algebra over CycloScalar (mu-free entries or single mu-power pivots).

#include <vector>

#include "qfs/cyclo.hpp"

namespace qfs {

using ScalarMatrix = std::vector<std::vector<CycloScalar>>;

/// Rank by Gaussian elimination with exact inverses of pivots.
int exact_rank(ScalarMatrix a);

}  // namespace qfs
