#pragma once

#include <optional>
#include <vector>

#include "msc/class_tag.hpp"
#include "msc/graph.hpp"
#include "msc/vertex_set.hpp"

namespace msc {

// Certificate types. Every recognizer either produces a certificate that
// revalidates against the class definition or reports non-membership.

struct Bipartition {
    VertexSet a, b; // independent sets; within each component the side holding
                    // the component's smallest vertex id goes to `a`
};

struct CliquePair {
    VertexSet c1, c2; // two cliques covering V(G)
};

struct SplitPartition {
    VertexSet k, i; // clique / independent set
};

struct BlockCutTree {
    std::vector<VertexSet> blocks;           // maximal 2-connected subgraphs, bridges, K1s
    VertexSet cut_vertices;
    std::vector<std::vector<int>> block_cuts; // per block, the cut vertices it contains
    std::vector<int> leaves;                  // block indices of tree-degree <= 1
};

struct DegeneracyResult {
    int k;
    std::vector<int> peel_order;
};

struct TwoK2Witness {
    int a, b, a2, b2; // edges ab and a2b2, no other adjacency among the four
};

std::optional<Bipartition> bipartition(const Graph& g);
std::optional<CliquePair> cobipartition(const Graph& g);
std::optional<SplitPartition> split_partition(const Graph& g);

// Perfect elimination order if chordal.
std::optional<std::vector<int>> is_chordal(const Graph& g);

DegeneracyResult degeneracy(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g); // n <= 1 counts as connected

BlockCutTree block_cut_tree(const Graph& g);
bool is_two_connected(const Graph& g); // requires n >= 3

std::optional<TwoK2Witness> has_induced_2K2(const Graph& g,
                                            const std::optional<VertexSet>& within = std::nullopt);

// True when every vertex of s∩A is adjacent to every vertex of s∩B;
// vacuously true if either side is empty.
bool is_complete_bipartite_inside(const Graph& g, const VertexSet& s, const Bipartition& bp);

bool is_vertex_cover(const Graph& g, const VertexSet& s);

// k if g is bipartite and k-regular.
std::optional<int> biregular_degree(const Graph& g);

// Lexicographically smallest set of k independent vertices sharing a common
// neighbor, found by a greedy ascending scan of each neighborhood. Exact on
// forests, where every neighborhood is independent.
std::optional<VertexSet> find_sibling_set(const Graph& g, int k);

} // namespace msc
