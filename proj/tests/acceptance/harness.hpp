#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "msc/bitcheck.hpp"
#include "msc/graph.hpp"

namespace acceptance {

struct CriterionResult {
    int number;
    std::string name;
    bool pass;
    std::string details;
    double seconds;
    double budget_seconds;
};

class Reporter {
public:
    void add(CriterionResult r) {
        std::lock_guard<std::mutex> lock(mu_);
        results_.push_back(std::move(r));
    }
    // One line per criterion; nonzero exit when any fails.
    int finish() {
        bool all = true;
        for (const auto& r : results_) {
            bool ok = r.pass && r.seconds <= r.budget_seconds;
            all &= ok;
            std::printf("[%s] criterion %d (%s): %s [%.1fs, budget %.0fs]\n",
                        ok ? "PASS" : "FAIL", r.number, r.name.c_str(), r.details.c_str(),
                        r.seconds, r.budget_seconds);
        }
        std::printf("acceptance: %s\n", all ? "all criteria passed" : "FAILURES PRESENT");
        return all ? 0 : 1;
    }

private:
    std::mutex mu_;
    std::vector<CriterionResult> results_;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Collects violations; keeps the first few as printable examples.
class Violations {
public:
    void record(const std::string& what) {
        count_.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mu_);
        if (examples_.size() < 3) examples_.push_back(what);
    }
    long long count() const { return count_.load(); }
    std::string summary() const {
        if (count_.load() == 0) return "";
        std::string s = " e.g. ";
        for (const auto& e : examples_) s += e + "; ";
        return s;
    }

private:
    std::atomic<long long> count_{0};
    std::mutex mu_;
    std::vector<std::string> examples_;
};

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Splits [0, total) into per-thread chunks aligned to `align` items.
template <class Fn>
void parallel_chunks(uint64_t total, uint64_t align, Fn fn) {
    unsigned workers = worker_count();
    if (total < align * workers) {
        fn(uint64_t(0), total);
        return;
    }
    std::vector<std::thread> threads;
    uint64_t per = (total / workers + align - 1) / align * align;
    for (unsigned t = 0; t < workers; ++t) {
        uint64_t lo = per * t;
        uint64_t hi = std::min(total, lo + per);
        if (lo >= hi) break;
        threads.emplace_back([=] { fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

// --- mask-level graph helpers (test-side) ---------------------------------
// Edge bits use column order: (0,1),(0,2),(1,2),(0,3),...

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline void rows_from_mask(int n, uint64_t mask, uint64_t* rows) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((mask >> idx) & 1) {
                rows[u] |= uint64_t(1) << v;
                rows[v] |= uint64_t(1) << u;
            }
}

inline msc::Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((mask >> idx) & 1) edges.emplace_back(u, v);
    return msc::Graph::from_edge_list(n, edges);
}

// Pair mask of all edges inside the vertex set s (toggling s flips these bits).
inline uint64_t pair_mask_of_set(int n, uint64_t s) {
    uint64_t out = 0;
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (((s >> u) & 1) && ((s >> v) & 1)) out |= uint64_t(1) << idx;
    return out;
}

inline msc::bitcheck::View64 view_of_rows(const uint64_t* rows, int n, uint64_t toggle = 0) {
    return {rows, n, toggle, n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1};
}

// Connectivity bit table over all graphs on n vertices, indexed by edge mask.
class ConnTable {
public:
    explicit ConnTable(int n) : n_(n), bits_((uint64_t(1) << pair_count(n)) / 64 + 1, 0) {
        parallel_chunks(uint64_t(1) << pair_count(n), 64, [&](uint64_t lo, uint64_t hi) {
            uint64_t rows[8];
            for (uint64_t mask = lo; mask < hi; ++mask) {
                rows_from_mask(n_, mask, rows);
                if (msc::bitcheck::is_connected(view_of_rows(rows, n_)))
                    bits_[mask / 64] |= uint64_t(1) << (mask % 64);
            }
        });
    }
    bool connected(uint64_t mask) const { return (bits_[mask / 64] >> (mask % 64)) & 1; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<uint64_t> bits_;
};

// Deterministic 2-coloring matching the production bipartition rule: within
// each component the side holding the smallest vertex id is side A.
// Returns false when not bipartite.
inline bool canonical_sides(const uint64_t* rows, int n, uint64_t* a_out, uint64_t* b_out) {
    uint64_t a = 0, b = 0, seen = 0;
    for (int root = 0; root < n; ++root) {
        uint64_t rb = uint64_t(1) << root;
        if (seen & rb) continue;
        uint64_t cur = rb;
        bool cur_a = true;
        a |= rb;
        seen |= rb;
        while (cur) {
            uint64_t next = 0;
            for (uint64_t f = cur; f; f &= f - 1) next |= rows[__builtin_ctzll(f)];
            next &= ~seen;
            (cur_a ? b : a) |= next;
            seen |= next;
            cur = next;
            cur_a = !cur_a;
        }
    }
    for (uint64_t f = a; f; f &= f - 1)
        if (rows[__builtin_ctzll(f)] & a) return false;
    for (uint64_t f = b; f; f &= f - 1)
        if (rows[__builtin_ctzll(f)] & b) return false;
    *a_out = a;
    *b_out = b;
    return true;
}

} // namespace acceptance
