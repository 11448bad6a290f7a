#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msc/recognizers.hpp"
#include "msc/solution.hpp"
#include "msc/solve_connectivity.hpp"

namespace msc {

// Definitional brute-force solver: scans subsets by size then lexicographic
// vertex sequence and returns the first one landing in the target class, so
// its answer is the canonical minimum every solver is compared against.
Solution brute_force_msc(const Graph& g, ClassTarget target, const MscOptions& opts = {});

// Exact minimum-weight disconnecting set; ties by the lexicographic rule.
Solution brute_force_weighted_disconnect(const Graph& g, const WeightMap& w,
                                         const MscOptions& opts = {});

// Every nontrivial split, one per unordered bipartition (vertex 0 on side A),
// validated against the split invariants. The exhaustive reference the split
// finder is tested against.
std::vector<QuadSplit> all_nontrivial_splits(const Graph& g, const MscOptions& opts = {});

struct Matching {
    int size;
    std::vector<std::pair<int, int>> edges;
};
Matching maximum_bipartite_matching(const Graph& g, const Bipartition& bp);

// Deterministic instance generator. Same spec, same graph: all randomness
// comes from mt19937_64 seeded with `seed`, consumed as documented in the
// README (draws are next() mod m; probability-p coins compare next() against
// floor(p * 2^64)).
struct GeneratorSpec {
    enum class Family {
        gnp,
        forest,
        bipartite,
        split,
        cobipartite,
        biregular,
        path,
        cycle,
        star,
        complete,
        edgeless,
    };
    Family family = Family::gnp;
    int n = 0;
    int k = 0;      // biregular degree
    double p = 0.5; // edge probability where applicable
    uint64_t seed = 0;
};

std::optional<GeneratorSpec::Family> parse_family(const std::string& name);
std::string family_name(GeneratorSpec::Family f);

Graph generate(const GeneratorSpec& spec);

// All 2^(n(n-1)/2) labeled graphs on n vertices, streamed in edge-mask order.
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn);

} // namespace msc
