#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msc/oracle.hpp"
#include "msc/recognizers.hpp"
#include "msc/solve_degeneracy.hpp"
#include "test_util.hpp"

using namespace msc;
using namespace testutil;

TEST_CASE("k = 0 cases") {
    CHECK(msc_forest_to_Dk(edgeless(4), 0).set == VertexSet{});
    CHECK(msc_forest_to_Dk(Graph::from_edge_list(0, {}), 0).set == VertexSet{});

    Solution k2 = msc_forest_to_Dk(complete(2), 0);
    CHECK(k2.set == VertexSet{0, 1});

    // K2 plus isolated vertices, edge not on the lowest ids
    Graph g = Graph::from_edge_list(5, {{2, 4}});
    CHECK(msc_forest_to_Dk(g, 0).set == VertexSet{2, 4});

    CHECK(msc_forest_to_Dk(path(3), 0).status == SolveStatus::none);
    CHECK(msc_forest_to_Dk(matching(2), 0).status == SolveStatus::none);
}

TEST_CASE("k = 1 cases") {
    CHECK(msc_forest_to_Dk(path(4), 1).set == VertexSet{});
    CHECK(msc_forest_to_Dk(complete(1), 1).status == SolveStatus::none);
    CHECK(msc_forest_to_Dk(Graph::from_edge_list(0, {}), 1).status == SolveStatus::none);
    Solution iso = msc_forest_to_Dk(edgeless(3), 1);
    CHECK(iso.set == VertexSet{0, 1});
}

TEST_CASE("k >= 2 examples") {
    Solution p8 = msc_forest_to_Dk(path(8), 2);
    CHECK(p8.size == 2);
    CHECK(p8.set == VertexSet{0, 2}); // sibling set around vertex 1

    Solution iso8 = msc_forest_to_Dk(edgeless(8), 2);
    CHECK(iso8.size == 3); // no sibling set; a triangle plus leftovers

    Solution star3 = msc_forest_to_Dk(star(4), 2);
    CHECK(star3.size == 2); // middle-range subset scan, n = 4

    CHECK(msc_forest_to_Dk(path(3), 5).status == SolveStatus::none);
}

TEST_CASE("preconditions and caps") {
    CHECK_THROWS_AS(msc_forest_to_Dk(cycle(4), 2), PreconditionError);
    CHECK_THROWS_AS(msc_forest_to_Dk(complete(3), 1), PreconditionError);
    CHECK_THROWS_AS(msc_forest_to_Dk(path(4), -1), InvalidInput);
    MscOptions opts;
    opts.degeneracy_brute_max_k = 3;
    CHECK_THROWS_AS(msc_forest_to_Dk(path(5), 4, opts), ResourceLimit);
}

TEST_CASE("returned graphs have degeneracy exactly k") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::forest;
        spec.n = 1 + static_cast<int>(rng() % 11);
        spec.seed = rng();
        Graph g = generate(spec);
        for (int k = 0; k <= 3; ++k) {
            Solution s = msc_forest_to_Dk(g, k);
            if (s.status == SolveStatus::none) continue;
            CHECK(degeneracy(g.subgraph_complement(s.set)).k == k);
        }
    }
}

TEST_CASE("solver equals oracle on random forests") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 120; ++trial) {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::forest;
        spec.n = 1 + static_cast<int>(rng() % 10);
        spec.seed = rng();
        Graph g = generate(spec);
        for (int k = 0; k <= 3; ++k) {
            Solution got = msc_forest_to_Dk(g, k);
            Solution want = brute_force_msc(g, ClassTarget::degeneracy(k));
            CHECK((got.status == SolveStatus::none) == (want.status == SolveStatus::none));
            if (got.status != SolveStatus::none) CHECK(got.size == want.size);
        }
    }
}

TEST_CASE("sibling dichotomy for large forests") {
    // n >= 2k+2: answer is k when a k-sibling set exists, else k+1
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::forest;
        spec.n = 8 + static_cast<int>(rng() % 5);
        spec.seed = rng();
        Graph g = generate(spec);
        for (int k = 2; k <= 3; ++k) {
            if (g.vertex_count() < 2 * k + 2) continue;
            Solution s = msc_forest_to_Dk(g, k);
            bool has_sibling = find_sibling_set(g, k).has_value();
            CHECK(s.size == (has_sibling ? k : k + 1));
        }
    }
}

TEST_CASE("lower bound: every feasible set has at least k vertices") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::forest;
        spec.n = 2 + static_cast<int>(rng() % 6);
        spec.seed = rng();
        Graph g = generate(spec);
        int n = g.vertex_count();
        for (int k = 2; k <= 4; ++k)
            for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
                VertexSet s = VertexSet::from_mask(mask);
                if (degeneracy(g.subgraph_complement(s)).k == k) CHECK(s.size() >= k);
            }
    }
}
