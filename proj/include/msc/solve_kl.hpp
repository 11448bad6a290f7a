#pragma once

#include <functional>
#include <vector>

#include "msc/solution.hpp"

namespace msc {

// Solvers among the k+l=2 classes (bipartite, co-bipartite, split). Each
// requires its source class as a precondition and returns a verified optimal
// solution; ties are broken by the smallest sorted vertex sequence.

Solution msc_bip_to_cobip(const Graph& g);
Solution msc_cobip_to_bip(const Graph& g);
Solution msc_split_to_bip(const Graph& g);
Solution msc_split_to_cobip(const Graph& g);
Solution msc_bip_to_split(const Graph& g);
Solution msc_cobip_to_split(const Graph& g);

// Complement transfer: G ⊕ S equals the complement of complement(G) ⊕ S, so a
// solver toward class C on complement(G) yields a solution toward co-C on G.
Solution msc_via_complement(const Graph& g, ClassTarget target,
                            const std::function<Solution(const Graph&)>& inner);

// Per-orientation context for one-sided ("special") solutions: z lists the
// vertices of side B having degree-one neighbors, o_by_z those neighbors.
struct SpecialContext {
    std::vector<int> z;
    std::vector<VertexSet> o_by_z;
    VertexSet o;
};
SpecialContext special_context(const Graph& g, const VertexSet& side_a, const VertexSet& side_b);

// Verified candidates for solutions meeting one side in exactly one vertex,
// over both orientations of the bipartition. Requires a bipartite, non-split
// input without isolated vertices and with both sides larger than one.
std::vector<Solution> special_phase(const Graph& g);

// One candidate per surviving clique Q of size <= 2: X picks one side of each
// component of G - Q (the side touched by N(Q), else the smaller one).
struct PhaseTwoCandidate {
    VertexSet q;
    VertexSet x;
    std::vector<VertexSet> w; // chosen side per component of G - Q
};
std::vector<PhaseTwoCandidate> phase_two_candidates(const Graph& g);
Solution phase_two(const Graph& g);

} // namespace msc
