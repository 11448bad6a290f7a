#include "msc/oracle.hpp"

#include <algorithm>
#include <random>

#include "msc/bitcheck.hpp"
#include "msc/subsets.hpp"

namespace msc {

Solution brute_force_msc(const Graph& g, ClassTarget target, const MscOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.oracle_cap)
        throw ResourceLimit("oracle cap exceeded: n=" + std::to_string(n) + " > cap=" +
                            std::to_string(opts.oracle_cap));
    if (n > 62) throw ResourceLimit("oracle supports at most 62 vertices");

    std::optional<VertexSet> found;
    if (g.has_bitrows()) {
        auto view = bitcheck::View64::of(g);
        for_each_subset_in_order(n, [&](const std::vector<int>& members) {
            view.toggle = mask_of(members);
            if (bitcheck::in_class(view, target)) {
                found = VertexSet(members);
                return true;
            }
            return false;
        });
    } else {
        for_each_subset_in_order(n, [&](const std::vector<int>& members) {
            VertexSet s(members);
            if (classify(g.subgraph_complement(s), target)) {
                found = std::move(s);
                return true;
            }
            return false;
        });
    }
    if (!found) return Solution::none_exists();
    return finish_solution(g, *found, target);
}

Solution brute_force_weighted_disconnect(const Graph& g, const WeightMap& w,
                                         const MscOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.weighted_oracle_cap)
        throw ResourceLimit("weighted oracle cap exceeded: n=" + std::to_string(n) + " > cap=" +
                            std::to_string(opts.weighted_oracle_cap));
    if (w.size() != n) throw InvalidInput("weight map does not match the graph");

    auto view = bitcheck::View64::of(g);
    std::optional<ExactWeight> best_w;
    std::optional<VertexSet> best;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        view.toggle = mask;
        if (!bitcheck::is_disconnected(view)) continue;
        __int128 sum = 0;
        for (uint64_t f = mask; f; f &= f - 1) sum += w.scaled(__builtin_ctzll(f));
        ExactWeight cand_w = w.total_scaled(sum);
        if (best_w && *best_w < cand_w) continue;
        VertexSet cand = VertexSet::from_mask(mask);
        if (!best_w || cand_w < *best_w || cand.lex_less(*best)) {
            best_w = cand_w;
            best = std::move(cand);
        }
    }
    if (!best) return Solution::none_exists();
    return finish_solution(g, *best, ClassTarget::of(ClassTag::disconnected), SolveStatus::optimal,
                           best_w);
}

std::vector<QuadSplit> all_nontrivial_splits(const Graph& g, const MscOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.split_enum_cap)
        throw ResourceLimit("split enumeration cap exceeded: n=" + std::to_string(n) + " > cap=" +
                            std::to_string(opts.split_enum_cap));
    std::vector<QuadSplit> out;
    if (n < 4) return out;
    for (uint64_t half = 0; half < (uint64_t(1) << (n - 1)); ++half) {
        uint64_t amask = (half << 1) | 1;
        VertexSet a = VertexSet::from_mask(amask);
        VertexSet b = VertexSet::full(n).subtract(a);
        if (a.size() < 2 || b.size() < 2) continue;
        std::vector<int> a1, b1;
        for (int u : a)
            for (int v : b)
                if (g.has_edge(u, v)) {
                    a1.push_back(u);
                    break;
                }
        for (int v : b)
            for (int u : a)
                if (g.has_edge(u, v)) {
                    b1.push_back(v);
                    break;
                }
        bool complete = true;
        for (int u : a)
            for (int v : b)
                if (g.has_edge(u, v) !=
                    (std::binary_search(a1.begin(), a1.end(), u) &&
                     std::binary_search(b1.begin(), b1.end(), v)))
                    complete = false;
        if (!complete) continue;
        QuadSplit s;
        s.a1 = VertexSet(a1);
        s.b1 = VertexSet(b1);
        s.a2 = a.subtract(s.a1);
        s.b2 = b.subtract(s.b1);
        out.push_back(std::move(s));
    }
    return out;
}

Matching maximum_bipartite_matching(const Graph& g, const Bipartition& bp) {
    for (auto [u, v] : g.edges())
        if (bp.a.contains(u) == bp.a.contains(v))
            throw InvalidInput("maximum_bipartite_matching: invalid bipartition");
    const int n = g.vertex_count();
    std::vector<int> match(static_cast<size_t>(n), -1); // over side-b vertices
    std::vector<char> visited(static_cast<size_t>(n));
    std::function<bool(int)> augment = [&](int a) -> bool {
        for (int b : g.neighbors(a)) {
            if (visited[static_cast<size_t>(b)]) continue;
            visited[static_cast<size_t>(b)] = 1;
            if (match[static_cast<size_t>(b)] == -1 || augment(match[static_cast<size_t>(b)])) {
                match[static_cast<size_t>(b)] = a;
                return true;
            }
        }
        return false;
    };
    Matching m{0, {}};
    for (int a : bp.a) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(a)) ++m.size;
    }
    for (int b = 0; b < n; ++b)
        if (match[static_cast<size_t>(b)] != -1)
            m.edges.emplace_back(match[static_cast<size_t>(b)], b);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}
    uint64_t next() { return engine(); }
    uint64_t below(uint64_t m) { return next() % m; }
    bool coin(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return next() < static_cast<uint64_t>(static_cast<long double>(p) * 18446744073709551616.0L);
    }
};

Graph finish_generated(const GeneratorSpec& spec, const std::vector<std::pair<int, int>>& edges) {
    Graph g = Graph::from_edge_list(spec.n, edges);
    using F = GeneratorSpec::Family;
    bool ok = true;
    switch (spec.family) {
        case F::forest: ok = degeneracy(g).k <= 1; break;
        case F::bipartite: ok = bipartition(g).has_value(); break;
        case F::cobipartite: ok = cobipartition(g).has_value(); break;
        case F::split: ok = split_partition(g).has_value(); break;
        case F::biregular: ok = biregular_degree(g) == std::optional<int>(spec.k); break;
        default: break;
    }
    if (!ok) throw InternalError("generated graph failed its family recognizer");
    return g;
}

} // namespace

std::optional<GeneratorSpec::Family> parse_family(const std::string& name) {
    using F = GeneratorSpec::Family;
    if (name == "gnp") return F::gnp;
    if (name == "forest") return F::forest;
    if (name == "bipartite") return F::bipartite;
    if (name == "split") return F::split;
    if (name == "cobipartite" || name == "co-bipartite") return F::cobipartite;
    if (name == "biregular") return F::biregular;
    if (name == "path") return F::path;
    if (name == "cycle") return F::cycle;
    if (name == "star") return F::star;
    if (name == "complete") return F::complete;
    if (name == "edgeless") return F::edgeless;
    return std::nullopt;
}

std::string family_name(GeneratorSpec::Family f) {
    using F = GeneratorSpec::Family;
    switch (f) {
        case F::gnp: return "gnp";
        case F::forest: return "forest";
        case F::bipartite: return "bipartite";
        case F::split: return "split";
        case F::cobipartite: return "cobipartite";
        case F::biregular: return "biregular";
        case F::path: return "path";
        case F::cycle: return "cycle";
        case F::star: return "star";
        case F::complete: return "complete";
        case F::edgeless: return "edgeless";
    }
    return "?";
}

Graph generate(const GeneratorSpec& spec) {
    using F = GeneratorSpec::Family;
    const int n = spec.n;
    if (n < 0) throw InvalidInput("generator: n must be non-negative");
    Rng rng(spec.seed);
    std::vector<std::pair<int, int>> edges;

    switch (spec.family) {
        case F::gnp:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.coin(spec.p)) edges.emplace_back(u, v);
            break;
        case F::forest:
            // Each vertex joins an earlier one or starts its own component.
            for (int v = 1; v < n; ++v) {
                int r = static_cast<int>(rng.below(static_cast<uint64_t>(v) + 1));
                if (r < v) edges.emplace_back(r, v);
            }
            break;
        case F::bipartite: {
            std::vector<int> side(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = static_cast<int>(rng.below(2));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)] && rng.coin(spec.p))
                        edges.emplace_back(u, v);
            break;
        }
        case F::cobipartite: {
            std::vector<int> side(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = static_cast<int>(rng.below(2));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
                        edges.emplace_back(u, v);
                    else if (rng.coin(spec.p))
                        edges.emplace_back(u, v);
                }
            break;
        }
        case F::split: {
            std::vector<int> side(static_cast<size_t>(n)); // 1 = clique
            for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = static_cast<int>(rng.below(2));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    int su = side[static_cast<size_t>(u)], sv = side[static_cast<size_t>(v)];
                    if (su == 1 && sv == 1) edges.emplace_back(u, v);
                    else if (su != sv && rng.coin(spec.p)) edges.emplace_back(u, v);
                }
            break;
        }
        case F::biregular: {
            if (n % 2 != 0) throw InvalidInput("biregular: n must be even");
            const int half = n / 2;
            if (spec.k < 0 || spec.k > half)
                throw InvalidInput("biregular: k must satisfy 0 <= k <= n/2");
            // Union of k random perfect matchings; redraw on parallel edges.
            const int retries = 1000;
            bool done = false;
            for (int attempt = 0; attempt < retries && !done; ++attempt) {
                std::vector<std::vector<char>> used(
                    static_cast<size_t>(half), std::vector<char>(static_cast<size_t>(half), 0));
                std::vector<std::pair<int, int>> trial;
                bool ok = true;
                for (int round = 0; round < spec.k && ok; ++round) {
                    std::vector<int> perm(static_cast<size_t>(half));
                    for (int i = 0; i < half; ++i) perm[static_cast<size_t>(i)] = i;
                    for (int i = half - 1; i > 0; --i)
                        std::swap(perm[static_cast<size_t>(i)],
                                  perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(i) + 1))]);
                    for (int i = 0; i < half; ++i) {
                        int j = perm[static_cast<size_t>(i)];
                        if (used[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                            ok = false;
                            break;
                        }
                        used[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                        trial.emplace_back(i, half + j);
                    }
                }
                if (ok) {
                    edges = std::move(trial);
                    done = true;
                }
            }
            if (!done) throw ResourceLimit("biregular: no edge-disjoint matchings after retries");
            break;
        }
        case F::path:
            for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
            break;
        case F::cycle:
            if (n < 3) throw InvalidInput("cycle: n must be at least 3");
            for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
            edges.emplace_back(0, n - 1);
            break;
        case F::star:
            if (n < 1) throw InvalidInput("star: n must be at least 1");
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            break;
        case F::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case F::edgeless:
            break;
    }
    return finish_generated(spec, edges);
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 8) throw InvalidInput("enumerate_all_graphs supports 0 <= n <= 8");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_list;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pair_list.emplace_back(u, v);
    std::vector<std::pair<int, int>> edges;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        edges.clear();
        for (uint64_t f = mask; f; f &= f - 1)
            edges.push_back(pair_list[static_cast<size_t>(__builtin_ctzll(f))]);
        fn(Graph::from_edge_list(n, edges));
    }
}

} // namespace msc
