#pragma once

#include <cstdint>
#include <vector>

namespace msc {

// Streams the subsets of {0..n-1} ordered by size, then lexicographically by
// the sorted vertex sequence ([0,2] before [1,2], and [0,3] before [1,2]).
// The first subset accepted under this order is the canonical minimum used by
// every tie-break in the library. fn receives the members and returns true to
// stop the scan.
template <class Fn>
bool for_each_subset_in_order(int n, Fn&& fn) {
    std::vector<int> combo;
    if (fn(combo)) return true;
    for (int size = 1; size <= n; ++size) {
        combo.resize(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) combo[static_cast<size_t>(i)] = i;
        while (true) {
            if (fn(combo)) return true;
            int i = size - 1;
            while (i >= 0 && combo[static_cast<size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++combo[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return false;
}

// Streams the size-k subsets of {0..n-1} in lexicographic order of the sorted
// vertex sequence. fn returns true to stop.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return false;
    std::vector<int> combo(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<size_t>(i)] = i;
    if (k == 0) return fn(combo);
    while (true) {
        if (fn(combo)) return true;
        int i = k - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++combo[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
}

inline uint64_t mask_of(const std::vector<int>& members) {
    uint64_t m = 0;
    for (int v : members) m |= uint64_t(1) << v;
    return m;
}

} // namespace msc
