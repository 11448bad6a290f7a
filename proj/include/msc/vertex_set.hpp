#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace msc {

// A sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }
    VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

    static VertexSet full(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }
    // Vertices of the low 64 ids selected by a bitmask.
    static VertexSet from_mask(uint64_t mask) {
        std::vector<int> v;
        for (uint64_t m = mask; m; m &= m - 1) v.push_back(__builtin_ctzll(m));
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    const std::vector<int>& ids() const { return ids_; }
    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    // Requires all ids < 64.
    uint64_t mask() const {
        uint64_t m = 0;
        for (int v : ids_) m |= uint64_t(1) << v;
        return m;
    }

    VertexSet unite(const VertexSet& o) const {
        std::vector<int> out;
        out.reserve(ids_.size() + o.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }
    VertexSet intersect(const VertexSet& o) const {
        std::vector<int> out;
        std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }
    VertexSet subtract(const VertexSet& o) const {
        std::vector<int> out;
        std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }
    VertexSet with(int v) const { return unite(VertexSet{v}); }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }
    bool operator!=(const VertexSet& o) const { return ids_ != o.ids_; }
    // Lexicographic on the sorted id sequence; the tie-break order used
    // everywhere a minimum solution is reported.
    bool lex_less(const VertexSet& o) const { return ids_ < o.ids_; }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < ids_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ids_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> ids_;
};

} // namespace msc
