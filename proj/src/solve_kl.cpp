#include "msc/solve_kl.hpp"

#include <algorithm>

#include "msc/recognizers.hpp"

namespace msc {

namespace {

constexpr ClassTarget kSplit{ClassTag::split, 0};
constexpr ClassTarget kBipartite{ClassTag::bipartite, 0};
constexpr ClassTarget kCoBipartite{ClassTag::co_bipartite, 0};

Bipartition require_bipartite(const Graph& g, const char* who) {
    auto bp = bipartition(g);
    if (!bp) throw PreconditionError(std::string(who) + ": input is not bipartite");
    return *bp;
}

SplitPartition require_split(const Graph& g, const char* who) {
    auto sp = split_partition(g);
    if (!sp) throw PreconditionError(std::string(who) + ": input is not a split graph");
    return *sp;
}

void require_cobipartite(const Graph& g, const char* who) {
    if (!cobipartition(g))
        throw PreconditionError(std::string(who) + ": input is not co-bipartite");
}

// Minimum feasible candidate under the (size, lex) order, or nullopt.
std::optional<VertexSet> best_feasible(const Graph& g, std::vector<VertexSet> candidates,
                                       ClassTarget target) {
    std::sort(candidates.begin(), candidates.end(),
              [](const VertexSet& x, const VertexSet& y) { return candidate_less(x, y); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates)
        if (in_class_after_toggle(g, c, target)) return c;
    return std::nullopt;
}

void check_phase_preconditions(const Graph& g, const Bipartition& bp, const char* who) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError(std::string(who) + ": input has isolated vertices");
    if (split_partition(g))
        throw PreconditionError(std::string(who) + ": input is already a split graph");
    if (bp.a.size() <= 1 || bp.b.size() <= 1)
        throw PreconditionError(std::string(who) + ": both sides must have more than one vertex");
}

} // namespace

Solution msc_bip_to_cobip(const Graph& g) {
    auto bp = require_bipartite(g, "msc_bip_to_cobip");
    // Any feasible S meets a side either not at all or in all but at most one
    // vertex, so the pool below is exhaustive.
    std::vector<VertexSet> a_vars{bp.a}, b_vars{bp.b};
    for (int v : bp.a) a_vars.push_back(bp.a.subtract(VertexSet{v}));
    for (int v : bp.b) b_vars.push_back(bp.b.subtract(VertexSet{v}));
    std::vector<VertexSet> cands{VertexSet{}};
    for (const auto& a : a_vars) cands.push_back(a);
    for (const auto& b : b_vars) cands.push_back(b);
    for (const auto& a : a_vars)
        for (const auto& b : b_vars) cands.push_back(a.unite(b));
    auto best = best_feasible(g, std::move(cands), kCoBipartite);
    if (!best) throw InternalError("msc_bip_to_cobip: candidate pool exhausted");
    return finish_solution(g, *best, kCoBipartite);
}

Solution msc_via_complement(const Graph& g, ClassTarget target,
                            const std::function<Solution(const Graph&)>& inner) {
    Solution s = inner(g.complement());
    if (s.status == SolveStatus::none) return Solution::none_exists();
    return finish_solution(g, s.set, target, s.status, s.weight);
}

Solution msc_cobip_to_bip(const Graph& g) {
    require_cobipartite(g, "msc_cobip_to_bip");
    return msc_via_complement(g, kBipartite, msc_bip_to_cobip);
}

Solution msc_split_to_bip(const Graph& g) {
    auto sp = require_split(g, "msc_split_to_bip");
    // Feasible sets keep at most one clique vertex outside S and take at most
    // two independent vertices; enumerate exactly those shapes.
    std::vector<VertexSet> k_vars{sp.k};
    for (int v : sp.k) k_vars.push_back(sp.k.subtract(VertexSet{v}));
    std::vector<VertexSet> i_vars{VertexSet{}};
    const auto& iv = sp.i.ids();
    for (size_t x = 0; x < iv.size(); ++x) {
        i_vars.push_back(VertexSet{iv[x]});
        for (size_t y = x + 1; y < iv.size(); ++y) i_vars.push_back(VertexSet{iv[x], iv[y]});
    }
    std::vector<VertexSet> cands{VertexSet{}};
    for (const auto& k : k_vars) cands.push_back(k);
    for (const auto& i : i_vars) cands.push_back(i);
    for (const auto& k : k_vars)
        for (const auto& i : i_vars) cands.push_back(k.unite(i));
    auto best = best_feasible(g, std::move(cands), kBipartite);
    if (!best) throw InternalError("msc_split_to_bip: candidate pool exhausted");
    return finish_solution(g, *best, kBipartite);
}

Solution msc_split_to_cobip(const Graph& g) {
    require_split(g, "msc_split_to_cobip");
    return msc_via_complement(g, kCoBipartite, msc_split_to_bip);
}

SpecialContext special_context(const Graph& g, const VertexSet& side_a, const VertexSet& side_b) {
    SpecialContext ctx;
    std::vector<int> all_o;
    for (int z : side_b) {
        std::vector<int> oz;
        for (int u : g.neighbors(z))
            if (g.degree(u) == 1 && side_a.contains(u)) oz.push_back(u);
        if (!oz.empty()) {
            ctx.z.push_back(z);
            ctx.o_by_z.push_back(VertexSet(oz));
            all_o.insert(all_o.end(), oz.begin(), oz.end());
        }
    }
    ctx.o = VertexSet(std::move(all_o));
    return ctx;
}

std::vector<Solution> special_phase(const Graph& g) {
    auto bp = require_bipartite(g, "special_phase");
    check_phase_preconditions(g, bp, "special_phase");

    std::vector<VertexSet> cands;
    auto run_orientation = [&](const VertexSet& a, const VertexSet& b) {
        SpecialContext ctx = special_context(g, a, b);
        // Without pendant neighbors no optimal one-sided solution exists
        // (it would have to contain all of A, beaten by A itself).
        if (ctx.z.empty()) return;
        // Candidates {v} ∪ (A ∖ O_z) over the full B × Z range: the one vertex
        // of B ∩ K that excludes its pendant neighbors need not be the chosen
        // B-vertex itself, so restricting v to Z misses solutions.
        for (size_t zi = 0; zi < ctx.z.size(); ++zi) {
            VertexSet base = a.subtract(ctx.o_by_z[zi]);
            for (int v : b) cands.push_back(base.with(v));
        }
        for (int v : b) {
            cands.push_back(a.subtract(ctx.o).with(v));
            cands.push_back(a.with(v));
        }
    };
    run_orientation(bp.a, bp.b);
    run_orientation(bp.b, bp.a);

    std::sort(cands.begin(), cands.end(),
              [](const VertexSet& x, const VertexSet& y) { return candidate_less(x, y); });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<Solution> out;
    for (auto& c : cands) {
        if (!in_class_after_toggle(g, c, kSplit)) continue;
        Solution s;
        s.set = std::move(c);
        s.size = s.set.size();
        s.status = SolveStatus::feasible;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<PhaseTwoCandidate> phase_two_candidates(const Graph& g) {
    auto bp = require_bipartite(g, "phase_two");
    check_phase_preconditions(g, bp, "phase_two");
    const int n = g.vertex_count();

    std::vector<VertexSet> qs{VertexSet{}};
    for (int v = 0; v < n; ++v) qs.push_back(VertexSet{v});
    for (auto [u, v] : g.edges()) qs.push_back(VertexSet{u, v});

    std::vector<PhaseTwoCandidate> out;
    std::vector<char> in_q(static_cast<size_t>(n)), hit(static_cast<size_t>(n));
    std::vector<int> color(static_cast<size_t>(n));
    std::vector<int> queue, side0, side1;

    for (const auto& q : qs) {
        std::fill(in_q.begin(), in_q.end(), 0);
        std::fill(hit.begin(), hit.end(), 0);
        std::fill(color.begin(), color.end(), -1);
        for (int v : q) in_q[static_cast<size_t>(v)] = 1;
        for (int v : q)
            for (int u : g.neighbors(v))
                if (!in_q[static_cast<size_t>(u)]) hit[static_cast<size_t>(u)] = 1;

        PhaseTwoCandidate cand;
        cand.q = q;
        bool discarded = false;
        std::vector<int> x_members;
        for (int root = 0; root < n && !discarded; ++root) {
            if (in_q[static_cast<size_t>(root)] || color[static_cast<size_t>(root)] != -1) continue;
            color[static_cast<size_t>(root)] = 0;
            queue.assign(1, root);
            side0.assign(1, root);
            side1.clear();
            bool hit0 = hit[static_cast<size_t>(root)], hit1 = false;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int u = queue[qi];
                for (int v : g.neighbors(u)) {
                    if (in_q[static_cast<size_t>(v)] || color[static_cast<size_t>(v)] != -1) continue;
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(v);
                    if (color[static_cast<size_t>(v)] == 0) {
                        side0.push_back(v);
                        hit0 |= hit[static_cast<size_t>(v)] != 0;
                    } else {
                        side1.push_back(v);
                        hit1 |= hit[static_cast<size_t>(v)] != 0;
                    }
                }
            }
            if (hit0 && hit1) {
                discarded = true;
                break;
            }
            // Side meeting N(Q) is forced; otherwise take the smaller side,
            // first-listed side on ties.
            const std::vector<int>& w =
                hit0 ? side0 : hit1 ? side1 : (side1.size() < side0.size() ? side1 : side0);
            cand.w.push_back(VertexSet(w));
            x_members.insert(x_members.end(), w.begin(), w.end());
        }
        if (discarded) continue;
        cand.x = VertexSet(std::move(x_members));
        if (!in_class_after_toggle(g, cand.q.unite(cand.x), kSplit)) continue;
        out.push_back(std::move(cand));
    }
    return out;
}

Solution phase_two(const Graph& g) {
    auto cands = phase_two_candidates(g);
    if (cands.empty()) throw InternalError("phase_two: no candidate survived");
    std::optional<VertexSet> best;
    for (auto& c : cands) {
        VertexSet s = c.q.unite(c.x);
        if (!best || candidate_less(s, *best)) best = std::move(s);
    }
    Solution s;
    s.set = *best;
    s.size = s.set.size();
    s.status = SolveStatus::feasible;
    return s;
}

Solution msc_bip_to_split(const Graph& g) {
    require_bipartite(g, "msc_bip_to_split");
    if (split_partition(g)) return finish_solution(g, VertexSet{}, kSplit);

    // A minimum solution never contains an isolated vertex; solve on the
    // stripped graph and map ids back.
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    Graph::Induced core = g.induce(VertexSet(keep));
    const Graph& h = core.graph;

    // All solutions of size at most two, in canonical order. The input is not
    // split, so sizes 0 and 1 are infeasible and a first hit here is optimal.
    const int hn = h.vertex_count();
    for (int u = 0; u < hn; ++u)
        for (int v = u + 1; v < hn; ++v) {
            VertexSet s{u, v};
            if (in_class_after_toggle(h, s, kSplit)) {
                VertexSet mapped{core.new_to_old[static_cast<size_t>(u)],
                                 core.new_to_old[static_cast<size_t>(v)]};
                return finish_solution(g, mapped, kSplit);
            }
        }

    std::optional<VertexSet> best;
    for (const auto& s : special_phase(h))
        if (!best || candidate_less(s.set, *best)) best = s.set;
    Solution p2 = phase_two(h);
    if (!best || candidate_less(p2.set, *best)) best = p2.set;

    std::vector<int> mapped;
    for (int v : *best) mapped.push_back(core.new_to_old[static_cast<size_t>(v)]);
    return finish_solution(g, VertexSet(std::move(mapped)), kSplit);
}

Solution msc_cobip_to_split(const Graph& g) {
    require_cobipartite(g, "msc_cobip_to_split");
    return msc_via_complement(g, kSplit, msc_bip_to_split);
}

} // namespace msc
