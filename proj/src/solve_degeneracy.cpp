#include "msc/solve_degeneracy.hpp"

#include "msc/recognizers.hpp"
#include "msc/subsets.hpp"

namespace msc {

Solution msc_forest_to_Dk(const Graph& g, int k, const MscOptions& opts) {
    if (k < 0) throw InvalidInput("degeneracy target must be non-negative");
    if (degeneracy(g).k > 1) throw PreconditionError("msc_forest_to_Dk: input is not a forest");
    const ClassTarget target = ClassTarget::degeneracy(k);
    const int n = g.vertex_count();

    if (k == 0) {
        if (g.edge_count() == 0) return finish_solution(g, VertexSet{}, target);
        // Only K2 ∪ nK1 can be cleared: the edge's endpoints must both be in S
        // and S must induce a clique of the forest, hence a single edge.
        auto comps = components(g);
        VertexSet edge_comp;
        bool shape_ok = true;
        for (const auto& c : comps) {
            if (c.size() == 1) continue;
            if (c.size() == 2 && edge_comp.empty()) {
                edge_comp = c;
                continue;
            }
            shape_ok = false;
            break;
        }
        if (!shape_ok || edge_comp.empty()) return Solution::none_exists();
        return finish_solution(g, edge_comp, target);
    }

    if (k == 1) {
        if (g.edge_count() >= 1) return finish_solution(g, VertexSet{}, target);
        if (n <= 1) return Solution::none_exists();
        return finish_solution(g, VertexSet{0, 1}, target);
    }

    if (n < k) return Solution::none_exists();

    if (n <= 2 * k + 1) {
        if (k > opts.degeneracy_brute_max_k)
            throw ResourceLimit("msc_forest_to_Dk: middle-range scan capped at k=" +
                                std::to_string(opts.degeneracy_brute_max_k));
        std::optional<VertexSet> best;
        for_each_subset_in_order(n, [&](const std::vector<int>& members) {
            VertexSet s(members);
            if (in_class_after_toggle(g, s, target)) {
                best = std::move(s);
                return true;
            }
            return false;
        });
        if (!best) return Solution::none_exists();
        return finish_solution(g, *best, target);
    }

    if (auto sib = find_sibling_set(g, k)) return finish_solution(g, *sib, target);

    // No k siblings: any independent k+1 vertices work. The larger side of the
    // bipartition has at least ceil(n/2) >= k+1 of them.
    auto bp = bipartition(g);
    const VertexSet& side = bp->b.size() > bp->a.size() ? bp->b : bp->a;
    std::vector<int> chosen(side.ids().begin(), side.ids().begin() + k + 1);
    return finish_solution(g, VertexSet(std::move(chosen)), target);
}

} // namespace msc
