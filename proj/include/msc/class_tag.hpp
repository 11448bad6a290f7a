#pragma once

#include <optional>
#include <string>

namespace msc {

// Dispatch key for target/source graph classes.
enum class ClassTag {
    bipartite,
    co_bipartite,
    split,
    chordal,
    degeneracy, // carries k
    two_connected,
    disconnected,
    edgeless,
};

// A class tag plus its parameter (k for degeneracy, ignored otherwise).
struct ClassTarget {
    ClassTag tag;
    int k = 0;

    static ClassTarget of(ClassTag t) { return {t, 0}; }
    static ClassTarget degeneracy(int k) { return {ClassTag::degeneracy, k}; }
    bool operator==(const ClassTarget& o) const { return tag == o.tag && k == o.k; }
};

inline std::string class_name(ClassTag t) {
    switch (t) {
        case ClassTag::bipartite: return "bipartite";
        case ClassTag::co_bipartite: return "co-bipartite";
        case ClassTag::split: return "split";
        case ClassTag::chordal: return "chordal";
        case ClassTag::degeneracy: return "degeneracy";
        case ClassTag::two_connected: return "2-connected";
        case ClassTag::disconnected: return "disconnected";
        case ClassTag::edgeless: return "edgeless";
    }
    return "?";
}

inline std::optional<ClassTag> parse_class_name(const std::string& s) {
    if (s == "bipartite") return ClassTag::bipartite;
    if (s == "co-bipartite" || s == "cobipartite") return ClassTag::co_bipartite;
    if (s == "split") return ClassTag::split;
    if (s == "chordal") return ClassTag::chordal;
    if (s == "degeneracy") return ClassTag::degeneracy;
    if (s == "2-connected" || s == "two-connected") return ClassTag::two_connected;
    if (s == "disconnected") return ClassTag::disconnected;
    if (s == "edgeless") return ClassTag::edgeless;
    return std::nullopt;
}

} // namespace msc
