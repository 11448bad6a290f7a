#pragma once

#include <algorithm>
#include <cstdint>

#include "msc/class_tag.hpp"
#include "msc/graph.hpp"

// Allocation-free class membership tests for graphs with at most 64 vertices,
// evaluated directly on a toggled adjacency view so that G ⊕ S never has to be
// materialized inside a 2^n subset scan. Agreement with the certificate-producing
// recognizers is pinned by tests.
namespace msc::bitcheck {

struct View64 {
    const uint64_t* rows;
    int n;
    uint64_t toggle; // adjacencies inside this vertex mask are complemented
    uint64_t full;

    static View64 of(const Graph& g, uint64_t toggle_mask = 0) {
        return {g.rows64(), g.vertex_count(), toggle_mask,
                g.vertex_count() == 64 ? ~uint64_t(0)
                                       : ((uint64_t(1) << g.vertex_count()) - 1)};
    }
    uint64_t row(int v) const {
        uint64_t r = rows[v];
        if ((toggle >> v) & 1) r ^= toggle ^ (uint64_t(1) << v);
        return r;
    }
};

inline int ctz(uint64_t x) { return __builtin_ctzll(x); }
inline int popcnt(uint64_t x) { return __builtin_popcountll(x); }

inline bool is_edgeless(const View64& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.row(v)) return false;
    return true;
}

inline bool is_connected(const View64& g) {
    if (g.n <= 1) return true;
    uint64_t reach = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) next |= g.row(ctz(f));
        frontier = next & ~reach;
        reach |= frontier;
    }
    return reach == g.full;
}

inline bool is_disconnected(const View64& g) { return g.n >= 2 && !is_connected(g); }

// Component masks; returns the count. `out` must hold up to n entries.
inline int components(const View64& g, uint64_t* out) {
    uint64_t seen = 0;
    int k = 0;
    for (int v = 0; v < g.n; ++v) {
        uint64_t b = uint64_t(1) << v;
        if (seen & b) continue;
        uint64_t comp = b, frontier = b;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f; f &= f - 1) next |= g.row(ctz(f));
            frontier = next & ~comp;
            comp |= frontier;
        }
        out[k++] = comp;
        seen |= comp;
    }
    return k;
}

// Two-colors each component, putting the component's smallest vertex id on
// side A. Returns false if some edge joins two same-colored vertices.
template <class RowFn>
inline bool bipartition_masks(int n, RowFn row, uint64_t* a_out, uint64_t* b_out) {
    uint64_t A = 0, B = 0, seen = 0;
    for (int v = 0; v < n; ++v) {
        uint64_t b = uint64_t(1) << v;
        if (seen & b) continue;
        uint64_t cur = b;
        bool cur_is_a = true;
        A |= b;
        seen |= b;
        while (cur) {
            uint64_t next = 0;
            for (uint64_t f = cur; f; f &= f - 1) next |= row(ctz(f));
            next &= ~seen;
            if (cur_is_a) B |= next; else A |= next;
            seen |= next;
            cur = next;
            cur_is_a = !cur_is_a;
        }
    }
    for (uint64_t f = A; f; f &= f - 1)
        if (row(ctz(f)) & A) return false;
    for (uint64_t f = B; f; f &= f - 1)
        if (row(ctz(f)) & B) return false;
    *a_out = A;
    *b_out = B;
    return true;
}

inline bool is_bipartite(const View64& g) {
    uint64_t a, b;
    return bipartition_masks(g.n, [&](int v) { return g.row(v); }, &a, &b);
}

inline bool is_co_bipartite(const View64& g) {
    uint64_t a, b;
    return bipartition_masks(
        g.n, [&](int v) { return ~g.row(v) & g.full & ~(uint64_t(1) << v); }, &a, &b);
}

// Hammer–Simeone degree-sequence test.
inline bool is_split(const View64& g) {
    int d[64];
    for (int v = 0; v < g.n; ++v) d[v] = popcnt(g.row(v));
    std::sort(d, d + g.n, [](int x, int y) { return x > y; });
    int m = 0;
    for (int i = 0; i < g.n; ++i)
        if (d[i] >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += d[i];
    for (int i = m; i < g.n; ++i) rhs += d[i];
    return lhs == rhs;
}

// MCS order + perfect-elimination check.
inline bool is_chordal(const View64& g) {
    if (g.n == 0) return true;
    int peo[64], pos[64], wt[64];
    for (int v = 0; v < g.n; ++v) wt[v] = 0;
    uint64_t unvisited = g.full;
    for (int i = g.n - 1; i >= 0; --i) {
        int best = -1;
        for (uint64_t f = unvisited; f; f &= f - 1) {
            int v = ctz(f);
            if (best < 0 || wt[v] > wt[best]) best = v;
        }
        peo[i] = best; // reverse of the visit order
        unvisited &= ~(uint64_t(1) << best);
        for (uint64_t f = g.row(best) & unvisited; f; f &= f - 1) ++wt[ctz(f)];
    }
    for (int i = 0; i < g.n; ++i) pos[peo[i]] = i;
    uint64_t remaining = g.full;
    for (int i = 0; i < g.n; ++i) {
        int v = peo[i];
        remaining &= ~(uint64_t(1) << v);
        uint64_t later = g.row(v) & remaining;
        if (!later) continue;
        int y = -1;
        for (uint64_t f = later; f; f &= f - 1) {
            int u = ctz(f);
            if (y < 0 || pos[u] < pos[y]) y = u;
        }
        if ((later & ~(uint64_t(1) << y)) & ~g.row(y)) return false;
    }
    return true;
}

// Min-degree peeling; smallest id among minima, matching the recognizer.
inline int degeneracy(const View64& g) {
    uint64_t remaining = g.full;
    int k = 0;
    while (remaining) {
        int best = -1, bestd = 0;
        for (uint64_t f = remaining; f; f &= f - 1) {
            int v = ctz(f);
            int d = popcnt(g.row(v) & remaining);
            if (best < 0 || d < bestd) best = v, bestd = d;
        }
        k = std::max(k, bestd);
        remaining &= ~(uint64_t(1) << best);
    }
    return k;
}

inline bool is_two_connected(const View64& g) {
    if (g.n < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v) {
        uint64_t keep = g.full & ~(uint64_t(1) << v);
        uint64_t start = keep & (-keep);
        uint64_t reach = start, frontier = start;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f; f &= f - 1) next |= g.row(ctz(f));
            frontier = next & keep & ~reach;
            reach |= frontier;
        }
        if (reach != keep) return false;
    }
    return true;
}

inline bool in_class(const View64& g, ClassTarget target) {
    switch (target.tag) {
        case ClassTag::bipartite: return is_bipartite(g);
        case ClassTag::co_bipartite: return is_co_bipartite(g);
        case ClassTag::split: return is_split(g);
        case ClassTag::chordal: return is_chordal(g);
        case ClassTag::degeneracy: return degeneracy(g) == target.k;
        case ClassTag::two_connected: return is_two_connected(g);
        case ClassTag::disconnected: return is_disconnected(g);
        case ClassTag::edgeless: return is_edgeless(g);
    }
    return false;
}

} // namespace msc::bitcheck
