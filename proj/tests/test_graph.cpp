#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msc/graph.hpp"
#include "msc/oracle.hpp"
#include "test_util.hpp"

using namespace msc;
using namespace testutil;

TEST_CASE("from_edge_list basics") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(2, 1));
    CHECK(!p3.has_edge(0, 2));

    Graph iso = Graph::from_edge_list(3, {});
    CHECK(iso.edge_count() == 0);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), InvalidInput);

    // duplicate edges collapse
    Graph dup = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("subgraph_complement removes one edge of K5") {
    Graph k5 = complete(5);
    Graph out = k5.subgraph_complement(VertexSet{0, 1});
    CHECK(out.edge_count() == 9);
    CHECK(!out.has_edge(0, 1));
    for (int v = 2; v < 5; ++v) {
        CHECK(out.has_edge(0, v));
        CHECK(out.has_edge(1, v));
    }
}

TEST_CASE("subgraph_complement neutral cases") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(8, rng);
        CHECK(g.subgraph_complement(VertexSet{}) == g);
        CHECK(g.subgraph_complement(VertexSet{3}) == g);
    }
    Graph g = path(3);
    CHECK_THROWS_AS(g.subgraph_complement(VertexSet{5}), InvalidInput);
}

TEST_CASE("subgraph_complement is an involution") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, rng);
        VertexSet s = random_subset(n, rng);
        CHECK(g.subgraph_complement(s).subgraph_complement(s) == g);
    }
}

TEST_CASE("complement") {
    CHECK(complete(3).complement() == edgeless(3));
    CHECK(cycle(5).complement() == Graph::from_edge_list(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(9, rng);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("complement commutation identity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 9);
        Graph g = random_graph(n, rng);
        VertexSet s = random_subset(n, rng);
        CHECK(g.subgraph_complement(s) == g.complement().subgraph_complement(s).complement());
    }
}

TEST_CASE("induced subgraph") {
    Graph p4 = path(4);
    auto ind = p4.induce(VertexSet{1, 2});
    CHECK(ind.graph == complete(2));
    CHECK(ind.new_to_old == std::vector<int>{1, 2});
    CHECK(ind.old_to_new[1] == 0);
    CHECK(ind.old_to_new[0] == -1);

    auto full = p4.induce(VertexSet::full(4));
    CHECK(full.graph == p4);

    CHECK_THROWS_AS(p4.induce(VertexSet{9}), InvalidInput);
}

TEST_CASE("induction commutes with complementation") {
    // induced(G⊕S, A) == induced(G, A) ⊕ (S∩A), exhaustively for n <= 4
    // and at random for larger n.
    for (int n = 0; n <= 4; ++n) {
        enumerate_all_graphs(n, [&](const Graph& g) {
            for (uint64_t smask = 0; smask < (uint64_t(1) << n); ++smask)
                for (uint64_t amask = 0; amask < (uint64_t(1) << n); ++amask) {
                    VertexSet s = VertexSet::from_mask(smask);
                    VertexSet a = VertexSet::from_mask(amask);
                    auto lhs = g.subgraph_complement(s).induce(a).graph;
                    auto rhs = g.induce(a).graph;
                    std::vector<int> mapped;
                    for (int v : s.intersect(a)) mapped.push_back(g.induce(a).old_to_new[v]);
                    CHECK(lhs == rhs.subgraph_complement(VertexSet(mapped)));
                }
        });
    }
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 20);
        Graph g = random_graph(n, rng, 0.3);
        VertexSet s = random_subset(n, rng);
        VertexSet a = random_subset(n, rng);
        auto ind = g.induce(a);
        std::vector<int> mapped;
        for (int v : s.intersect(a)) mapped.push_back(ind.old_to_new[v]);
        CHECK(g.subgraph_complement(s).induce(a).graph ==
              ind.graph.subgraph_complement(VertexSet(mapped)));
    }
}
