#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msc/errors.hpp"
#include "msc/vertex_set.hpp"

namespace msc {

// Exact nonnegative rational with a power-of-ten denominator. Decimal inputs
// are scaled to a common integer grid so weight sums and comparisons are exact.
struct ExactWeight {
    long long num = 0;
    long long scale = 1;

    static ExactWeight zero() { return {0, 1}; }
    static ExactWeight integer(long long v) { return {v, 1}; }

    bool operator==(const ExactWeight& o) const {
        return static_cast<__int128>(num) * o.scale == static_cast<__int128>(o.num) * scale;
    }
    bool operator<(const ExactWeight& o) const {
        return static_cast<__int128>(num) * o.scale < static_cast<__int128>(o.num) * scale;
    }
    bool operator<=(const ExactWeight& o) const { return !(o < *this); }

    bool is_integral() const { return num % scale == 0; }

    // Exact decimal rendering: "11", "2.5", "0.125".
    std::string to_string() const;
};

// Positive weight per vertex; defaults to 1. Stored as integers on a shared
// power-of-ten scale.
class WeightMap {
public:
    WeightMap() = default;
    static WeightMap unit(int n) { return WeightMap(n, 1); }
    WeightMap(int n, long long scale) : scale_(scale), num_(static_cast<size_t>(n), scale) {}

    int size() const { return static_cast<int>(num_.size()); }
    long long scale() const { return scale_; }
    long long scaled(int v) const { return num_[static_cast<size_t>(v)]; }
    void set_scaled(int v, long long value) {
        if (value <= 0) throw InvalidInput("weight must be positive");
        num_[static_cast<size_t>(v)] = value;
    }

    ExactWeight weight(int v) const { return {num_[static_cast<size_t>(v)], scale_}; }

    ExactWeight total(const VertexSet& s) const {
        __int128 sum = 0;
        for (int v : s) sum += num_[static_cast<size_t>(v)];
        return make_weight(sum);
    }
    ExactWeight total_scaled(__int128 scaled_sum) const { return make_weight(scaled_sum); }

private:
    ExactWeight make_weight(__int128 sum) const {
        if (sum > static_cast<__int128>(1) << 62)
            throw ResourceLimit("weight sum overflows the exact range");
        return {static_cast<long long>(sum), scale_};
    }

    long long scale_ = 1;
    std::vector<long long> num_;
};

} // namespace msc
