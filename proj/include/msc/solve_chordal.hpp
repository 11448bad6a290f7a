#pragma once

#include "msc/solution.hpp"

namespace msc {

// For 2-connected bipartite G with G[S] not complete bipartite across the
// bipartition, G ⊕ S is chordal exactly when S is a vertex cover and G[S] has
// no induced 2K2. Violating the hypotheses is an error, not a false.
bool chordal_solution_check(const Graph& g, const VertexSet& s);

// Minimum chordal complementation for a 2-connected k-biregular input.
// Brute force below nine vertices; an adjacent pair for even cycles (k = 2);
// one side of the bipartition for k >= 3.
Solution msc_biregular_to_chordal(const Graph& g);

} // namespace msc
