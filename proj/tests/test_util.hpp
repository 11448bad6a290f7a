#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "msc/graph.hpp"

namespace testutil {

inline msc::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return msc::Graph::from_edge_list(n, e);
}

inline msc::Graph cycle(int n) {
    auto e = std::vector<std::pair<int, int>>{};
    for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    e.emplace_back(0, n - 1);
    return msc::Graph::from_edge_list(n, e);
}

inline msc::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return msc::Graph::from_edge_list(n, e);
}

inline msc::Graph edgeless(int n) { return msc::Graph::from_edge_list(n, {}); }

inline msc::Graph star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return msc::Graph::from_edge_list(n, e);
}

// k disjoint copies of K2: edges (0,1), (2,3), ...
inline msc::Graph matching(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return msc::Graph::from_edge_list(2 * k, e);
}

inline msc::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return msc::Graph::from_edge_list(a + b, e);
}

inline msc::Graph from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> e;
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((mask >> idx) & 1) e.emplace_back(u, v);
    return msc::Graph::from_edge_list(n, e);
}

inline msc::Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) e.emplace_back(u, v);
    return msc::Graph::from_edge_list(n, e);
}

inline msc::VertexSet random_subset(int n, std::mt19937_64& rng) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) ids.push_back(v);
    return msc::VertexSet(ids);
}

inline std::string fixtures_dir() {
    const char* env = std::getenv("MSC_FIXTURES");
    return env ? env : "tests/fixtures";
}

} // namespace testutil
