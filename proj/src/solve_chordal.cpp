#include "msc/solve_chordal.hpp"

#include "msc/recognizers.hpp"
#include "msc/subsets.hpp"

namespace msc {

namespace {
constexpr ClassTarget kChordal{ClassTag::chordal, 0};
}

bool chordal_solution_check(const Graph& g, const VertexSet& s) {
    auto bp = bipartition(g);
    if (!bp) throw PreconditionError("chordal_solution_check: input is not bipartite");
    if (!is_two_connected(g))
        throw PreconditionError("chordal_solution_check: input is not 2-connected");
    VertexSet sa = s.intersect(bp->a), sb = s.intersect(bp->b);
    if (!sa.empty() && !sb.empty() && is_complete_bipartite_inside(g, s, *bp))
        throw PreconditionError(
            "chordal_solution_check: G[S] is complete bipartite across the bipartition");
    return is_vertex_cover(g, s) && !has_induced_2K2(g, s).has_value();
}

Solution msc_biregular_to_chordal(const Graph& g) {
    auto k = biregular_degree(g);
    if (!k) throw PreconditionError("msc_biregular_to_chordal: input is not biregular");
    if (!is_two_connected(g))
        throw PreconditionError("msc_biregular_to_chordal: input is not 2-connected");
    if (*k < 2)
        throw PreconditionError("msc_biregular_to_chordal: degree must be at least 2");
    if (is_chordal(g)) return finish_solution(g, VertexSet{}, kChordal);

    const int n = g.vertex_count();
    if (n < 9) {
        std::optional<VertexSet> best;
        for_each_subset_in_order(n, [&](const std::vector<int>& members) {
            VertexSet s(members);
            if (in_class_after_toggle(g, s, kChordal)) {
                best = std::move(s);
                return true;
            }
            return false;
        });
        if (!best) throw InternalError("msc_biregular_to_chordal: brute force found nothing");
        return finish_solution(g, *best, kChordal);
    }
    if (*k == 2) {
        // A 2-connected 2-biregular graph is an even cycle; removing one edge
        // leaves a path. This undercuts the one-side solution from ten
        // vertices up (C10 has minimum 2, not 5), so the pair wins here.
        return finish_solution(g, VertexSet{0, g.neighbors(0)[0]}, kChordal);
    }
    auto bp = bipartition(g);
    return finish_solution(g, bp->a, kChordal);
}

} // namespace msc
