#include "msc/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace msc {

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<size_t>(root)] != -1) continue;
        color[static_cast<size_t>(root)] = 0;
        queue.assign(1, root);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) (color[static_cast<size_t>(v)] == 0 ? a : b).push_back(v);
    Bipartition bp;
    bp.a = VertexSet(std::move(a));
    bp.b = VertexSet(std::move(b));
    return bp;
}

std::optional<CliquePair> cobipartition(const Graph& g) {
    auto bp = bipartition(g.complement());
    if (!bp) return std::nullopt;
    return CliquePair{bp->a, bp->b};
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
        return x < y;
    });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[static_cast<size_t>(i)]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += g.degree(order[static_cast<size_t>(i)]);
    for (int i = m; i < n; ++i) rhs += g.degree(order[static_cast<size_t>(i)]);
    if (lhs != rhs) return std::nullopt;
    // A boundary vertex of degree exactly m-1 spends its whole degree inside
    // the clique; listing it on the independent side keeps both certificates
    // valid and makes the clique minimal.
    if (m >= 1 && g.degree(order[static_cast<size_t>(m - 1)]) == m - 1) --m;
    SplitPartition sp;
    sp.k = VertexSet(std::vector<int>(order.begin(), order.begin() + m));
    sp.i = VertexSet(std::vector<int>(order.begin() + m, order.end()));
    // The degree construction is exact, but the certificate is cheap to recheck.
    for (int u : sp.k)
        for (int v : sp.k)
            if (u < v && !g.has_edge(u, v)) return std::nullopt;
    for (int u : sp.i)
        for (int v : sp.i)
            if (u < v && g.has_edge(u, v)) return std::nullopt;
    return sp;
}

std::optional<std::vector<int>> is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<char> picked(static_cast<size_t>(n), 0);
    std::vector<int> peo(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!picked[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        picked[static_cast<size_t>(best)] = 1;
        peo[static_cast<size_t>(i)] = best; // reverse of the MCS visit order
        for (int u : g.neighbors(best))
            if (!picked[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(peo[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[static_cast<size_t>(i)];
        int first = -1;
        for (int u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i &&
                (first < 0 || pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(first)]))
                first = u;
        if (first < 0) continue;
        for (int u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i && u != first && !g.has_edge(first, u))
                return std::nullopt;
    }
    return peo;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    DegeneracyResult r{0, {}};
    r.peel_order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<size_t>(v)] &&
                (best < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        r.k = std::max(r.k, deg[static_cast<size_t>(best)]);
        removed[static_cast<size_t>(best)] = 1;
        r.peel_order.push_back(best);
        for (int u : g.neighbors(best))
            if (!removed[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
    }
    return r;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<VertexSet> out;
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        queue.assign(1, root);
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int v : g.neighbors(queue[qi]))
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
        out.push_back(VertexSet(queue));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return components(g).size() == 1;
}

BlockCutTree block_cut_tree(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1);
    std::vector<size_t> next_edge(static_cast<size_t>(n), 0);
    std::vector<char> cut(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<VertexSet> blocks;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        if (g.degree(root) == 0) {
            disc[static_cast<size_t>(root)] = timer++;
            blocks.push_back(VertexSet{root}); // isolated vertex: a K1 block
            continue;
        }
        int root_children = 0;
        std::vector<int> stack{root};
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (next_edge[static_cast<size_t>(u)] < g.neighbors(u).size()) {
                int v = g.neighbors(u)[next_edge[static_cast<size_t>(u)]++];
                if (disc[static_cast<size_t>(v)] == -1) {
                    estack.emplace_back(u, v);
                    parent[static_cast<size_t>(v)] = u;
                    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
                    if (u == root) ++root_children;
                    stack.push_back(v);
                } else if (v != parent[static_cast<size_t>(u)] &&
                           disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                    estack.emplace_back(u, v);
                    low[static_cast<size_t>(u)] =
                        std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = parent[static_cast<size_t>(u)];
                low[static_cast<size_t>(p)] =
                    std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
                    if (p != root) cut[static_cast<size_t>(p)] = 1;
                    std::vector<int> verts;
                    while (!estack.empty()) {
                        auto e = estack.back();
                        estack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                        if (e.first == p && e.second == u) break;
                    }
                    blocks.push_back(VertexSet(std::move(verts)));
                }
            }
        }
        if (root_children >= 2) cut[static_cast<size_t>(root)] = 1;
    }

    BlockCutTree t;
    t.blocks = std::move(blocks);
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v)
        if (cut[static_cast<size_t>(v)]) cuts.push_back(v);
    t.cut_vertices = VertexSet(std::move(cuts));
    t.block_cuts.resize(t.blocks.size());
    for (size_t b = 0; b < t.blocks.size(); ++b)
        for (int v : t.blocks[b])
            if (t.cut_vertices.contains(v)) t.block_cuts[b].push_back(v);
    for (size_t b = 0; b < t.blocks.size(); ++b)
        if (t.block_cuts[b].size() <= 1) t.leaves.push_back(static_cast<int>(b));
    return t;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return block_cut_tree(g).blocks.size() == 1;
}

std::optional<TwoK2Witness> has_induced_2K2(const Graph& g,
                                            const std::optional<VertexSet>& within) {
    auto inside = [&](int v) { return !within || within->contains(v); };
    auto es = g.edges();
    std::vector<std::pair<int, int>> filtered;
    for (auto e : es)
        if (inside(e.first) && inside(e.second)) filtered.push_back(e);
    for (size_t i = 0; i < filtered.size(); ++i)
        for (size_t j = i + 1; j < filtered.size(); ++j) {
            auto [a, b] = filtered[i];
            auto [a2, b2] = filtered[j];
            if (a == a2 || a == b2 || b == a2 || b == b2) continue;
            if (g.has_edge(a, a2) || g.has_edge(a, b2) || g.has_edge(b, a2) ||
                g.has_edge(b, b2))
                continue;
            return TwoK2Witness{a, b, a2, b2};
        }
    return std::nullopt;
}

bool is_complete_bipartite_inside(const Graph& g, const VertexSet& s, const Bipartition& bp) {
    VertexSet sa = s.intersect(bp.a), sb = s.intersect(bp.b);
    for (int u : sa)
        for (int v : sb)
            if (!g.has_edge(u, v)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

std::optional<int> biregular_degree(const Graph& g) {
    if (!bipartition(g)) return std::nullopt;
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::optional<VertexSet> find_sibling_set(const Graph& g, int k) {
    if (k <= 0) throw InvalidInput("sibling set size must be positive");
    std::optional<VertexSet> best;
    std::vector<int> chosen;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) < k) continue;
        chosen.clear();
        for (int v : g.neighbors(u)) {
            bool independent = true;
            for (int w : chosen)
                if (g.has_edge(v, w)) { independent = false; break; }
            if (independent) {
                chosen.push_back(v);
                if (static_cast<int>(chosen.size()) == k) break;
            }
        }
        if (static_cast<int>(chosen.size()) == k) {
            VertexSet cand(chosen);
            if (!best || cand.lex_less(*best)) best = std::move(cand);
        }
    }
    return best;
}

} // namespace msc
