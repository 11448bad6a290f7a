#include "msc/solution.hpp"

#include "msc/bitcheck.hpp"

namespace msc {

std::string ExactWeight::to_string() const {
    long long whole = num / scale;
    long long frac = num % scale;
    std::string s = std::to_string(whole);
    if (frac == 0) return s;
    long long digits = 0;
    for (long long t = scale; t > 1; t /= 10) ++digits;
    std::string f = std::to_string(frac);
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    return s + "." + f;
}

std::optional<Certificate> classify(const Graph& g, ClassTarget target) {
    Certificate cert;
    cert.target = target;
    switch (target.tag) {
        case ClassTag::bipartite: {
            auto bp = bipartition(g);
            if (!bp) return std::nullopt;
            cert.data = *bp;
            return cert;
        }
        case ClassTag::co_bipartite: {
            auto cp = cobipartition(g);
            if (!cp) return std::nullopt;
            cert.data = *cp;
            return cert;
        }
        case ClassTag::split: {
            auto sp = split_partition(g);
            if (!sp) return std::nullopt;
            cert.data = *sp;
            return cert;
        }
        case ClassTag::chordal: {
            auto peo = is_chordal(g);
            if (!peo) return std::nullopt;
            cert.data = EliminationOrder{*peo};
            return cert;
        }
        case ClassTag::degeneracy: {
            auto d = degeneracy(g);
            if (d.k != target.k) return std::nullopt;
            cert.data = DegeneracyWitness{d.k, d.peel_order};
            return cert;
        }
        case ClassTag::two_connected: {
            if (!is_two_connected(g)) return std::nullopt;
            return cert;
        }
        case ClassTag::disconnected: {
            auto comps = components(g);
            if (comps.size() < 2) return std::nullopt;
            cert.data = ComponentList{std::move(comps)};
            return cert;
        }
        case ClassTag::edgeless: {
            if (g.edge_count() != 0) return std::nullopt;
            return cert;
        }
    }
    return std::nullopt;
}

bool in_class_after_toggle(const Graph& g, const VertexSet& s, ClassTarget target) {
    if (g.vertex_count() <= 64 && g.has_bitrows())
        return bitcheck::in_class(bitcheck::View64::of(g, s.mask()), target);
    return classify(g.subgraph_complement(s), target).has_value();
}

Solution finish_solution(const Graph& g, const VertexSet& s, ClassTarget target,
                         SolveStatus status, std::optional<ExactWeight> weight) {
    auto cert = classify(g.subgraph_complement(s), target);
    if (!cert)
        throw InternalError("produced solution " + s.to_string() +
                            " failed verification against target " + class_name(target.tag));
    Solution sol;
    sol.set = s;
    sol.size = s.size();
    sol.weight = weight;
    sol.status = status;
    sol.certificate = std::move(cert);
    return sol;
}

} // namespace msc
