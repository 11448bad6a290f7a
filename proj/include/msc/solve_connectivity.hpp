#pragma once

#include <optional>

#include "msc/solution.hpp"

namespace msc {

// A split of a graph: all edges between the two sides run between the
// frontier classes a1 and b1 and form a complete bipartite pattern there.
struct QuadSplit {
    VertexSet a2, a1, b1, b2;
    VertexSet side_a() const { return a1.unite(a2); }
    VertexSet side_b() const { return b1.unite(b2); }
    bool nontrivial() const { return a1.size() + a2.size() >= 2 && b1.size() + b2.size() >= 2; }
};

enum class SplitSide { A, B };

// Side of a split plus one marker vertex standing in for the far frontier,
// carrying the far frontier's total weight. expansion maps each quotient
// vertex back to the input vertices it represents (relative to the graph the
// quotient was taken from; nested lifts are composed by the recursion).
struct QuotientGraph {
    Graph graph;
    int marker;
    std::vector<VertexSet> expansion;
    WeightMap weights;
};

// First nontrivial split under the deterministic enumeration order, or
// nullopt exactly when g is prime. Exhaustive over all bipartitions, so
// completeness holds by construction; sizes beyond the cap are an error.
std::optional<QuadSplit> find_nontrivial_split(const Graph& g, const MscOptions& opts = {});

QuotientGraph quotient(const Graph& g, const QuadSplit& split, SplitSide side, const WeightMap& w);

// Minimum-weight disconnecting set of a connected prime graph: the lightest
// closed neighborhood N[u].
Solution prime_disconnect(const Graph& g, const WeightMap& w);

Solution msc_to_2connected(const Graph& g, const MscOptions& opts = {});

Solution msc_to_disconnected(const Graph& g, const WeightMap& w, const MscOptions& opts = {});

} // namespace msc
