#pragma once

#include <optional>
#include <variant>

#include "msc/class_tag.hpp"
#include "msc/graph.hpp"
#include "msc/recognizers.hpp"
#include "msc/weights.hpp"

namespace msc {

struct EliminationOrder {
    std::vector<int> order;
};
struct DegeneracyWitness {
    int k;
    std::vector<int> peel_order;
};
struct ComponentList {
    std::vector<VertexSet> comps;
};

// Proof that a graph belongs to a class, produced by the recognizers.
struct Certificate {
    ClassTarget target;
    std::variant<std::monostate, Bipartition, CliquePair, SplitPartition, EliminationOrder,
                 DegeneracyWitness, ComponentList>
        data;
};

// Membership test with certificate; nullopt when g is not in the class.
std::optional<Certificate> classify(const Graph& g, ClassTarget target);

// Is g ⊕ s in the class? Uses the bit kernels when g fits in 64 bits,
// otherwise materializes the complemented graph.
bool in_class_after_toggle(const Graph& g, const VertexSet& s, ClassTarget target);

enum class SolveStatus { optimal, feasible, none };

inline const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::none: return "none";
    }
    return "?";
}

struct Solution {
    VertexSet set;
    int size = 0;
    std::optional<ExactWeight> weight;
    SolveStatus status = SolveStatus::none;
    std::optional<Certificate> certificate;

    static Solution none_exists() { return Solution{}; }
};

// The deterministic candidate order: smaller set first, then lexicographically
// smaller sorted vertex sequence.
inline bool candidate_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
}

// Re-verifies g ⊕ s against the target and packages the result; throws
// InternalError when verification fails.
Solution finish_solution(const Graph& g, const VertexSet& s, ClassTarget target,
                         SolveStatus status = SolveStatus::optimal,
                         std::optional<ExactWeight> weight = std::nullopt);

// Solver caps. Exceeding one raises ResourceLimit rather than degrading silently.
struct MscOptions {
    int oracle_cap = 16;              // max n for the definitional subset-scan oracle
    int weighted_oracle_cap = 13;     // max n for the weighted disconnection oracle
    int split_enum_cap = 14;          // max n for exhaustive split listing
    int split_find_max_n = 20;        // max n for the exhaustive split finder
    int twoconn_search_max_n = 20;    // exact-search fallback bound, 2-connected target
    int twoconn_search_max_size = 6;  // exact-search size cap in the fallback
    int degeneracy_brute_max_k = 12;  // middle-range brute-force cap for forests
};

} // namespace msc
