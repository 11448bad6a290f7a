#include "msc/graph.hpp"

#include <algorithm>
#include <string>

namespace msc {

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw InvalidInput(std::string(what) + ": vertex id " + std::to_string(v) +
                           " out of range for n=" + std::to_string(n_));
}

void Graph::build_bits(int bitrow_threshold) {
    if (n_ > bitrow_threshold || n_ == 0) return;
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * static_cast<size_t>(words_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<size_t>(v)])
            bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u) / 64] |=
                uint64_t(1) << (u % 64);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            int bitrow_threshold) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges) {
        g.check_vertex(u, "edge");
        g.check_vertex(v, "edge");
        if (u == v)
            throw InvalidInput("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    g.m_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    g.build_bits(bitrow_threshold);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    if (u == v) return false;
    if (!bits_.empty())
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::subgraph_complement(const VertexSet& s) const {
    for (int v : s) check_vertex(v, "subgraph_complement");
    auto es = edges();
    std::vector<std::pair<int, int>> out;
    out.reserve(es.size());
    for (auto [u, v] : es)
        if (!(s.contains(u) && s.contains(v))) out.emplace_back(u, v);
    const auto& ids = s.ids();
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (!has_edge(ids[i], ids[j])) out.emplace_back(ids[i], ids[j]);
    return from_edge_list(n_, out);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return from_edge_list(n_, out);
}

Graph Graph::induced_subgraph(const VertexSet& a) const { return induce(a).graph; }

Graph::Induced Graph::induce(const VertexSet& a) const {
    for (int v : a) check_vertex(v, "induced_subgraph");
    Induced r;
    r.old_to_new.assign(static_cast<size_t>(n_), -1);
    r.new_to_old = a.ids();
    for (size_t i = 0; i < r.new_to_old.size(); ++i)
        r.old_to_new[static_cast<size_t>(r.new_to_old[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : a)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v && r.old_to_new[static_cast<size_t>(v)] >= 0)
                es.emplace_back(r.old_to_new[static_cast<size_t>(u)], r.old_to_new[static_cast<size_t>(v)]);
    r.graph = from_edge_list(a.size(), es);
    return r;
}

Graph subgraph_complement(const Graph& g, const VertexSet& s) { return g.subgraph_complement(s); }
Graph complement(const Graph& g) { return g.complement(); }

} // namespace msc
