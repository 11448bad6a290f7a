#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msc/errors.hpp"
#include "msc/vertex_set.hpp"

namespace msc {

// Immutable simple undirected graph over vertex ids 0..n-1.
//
// Adjacency is kept as sorted neighbor lists plus, for graphs with at most
// `bitrow_threshold` vertices, one bit row per vertex so edge queries and the
// subset scans of the brute-force oracle stay O(1) per probe.
class Graph {
public:
    static constexpr int kDefaultBitRowThreshold = 256;

    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                                int bitrow_threshold = kDefaultBitRowThreshold);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    // All edges as pairs (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_bitrows() const { return !bits_.empty(); }
    // Row v of the adjacency bit matrix; valid when has_bitrows() and n <= 64.
    uint64_t row64(int v) const { return bits_[static_cast<size_t>(v) * static_cast<size_t>(words_)]; }
    const uint64_t* rows64() const { return bits_.data(); }

    // G ⊕ S: toggles every adjacency with both endpoints in s.
    Graph subgraph_complement(const VertexSet& s) const;
    Graph complement() const;

    struct Induced;
    Graph induced_subgraph(const VertexSet& a) const;
    Induced induce(const VertexSet& a) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v, const char* what) const;
    void build_bits(int bitrow_threshold);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_; // row-major, words_ words per row; empty above threshold
    int words_ = 0;
};

struct Graph::Induced {
    Graph graph;
    std::vector<int> old_to_new; // -1 for vertices outside the chosen set
    std::vector<int> new_to_old;
};

Graph subgraph_complement(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

} // namespace msc
