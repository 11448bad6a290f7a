#pragma once

#include "msc/solution.hpp"

namespace msc {

// Minimum complementation of a forest into the graphs of degeneracy exactly k.
// k = 0 and k = 1 reduce to a component census; for k >= 2 the answer is a
// size-k sibling set when one exists and any independent k+1 vertices
// otherwise, with an exact subset scan in the middle range k <= n <= 2k+1.
Solution msc_forest_to_Dk(const Graph& g, int k, const MscOptions& opts = {});

} // namespace msc
