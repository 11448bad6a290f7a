#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "msc/io.hpp"
#include "msc/oracle.hpp"
#include "test_util.hpp"

using namespace msc;
using namespace testutil;

namespace {

// Independent reference graph6 encoder for cross-checking the codec: builds
// the bit string directly and packs it without sharing code with the library.
std::string reference_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits += g.has_edge(u, v) ? '1' : '0';
    while (bits.size() % 6 != 0) bits += '0';
    std::string out(1, static_cast<char>(n + 63));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (size_t j = 0; j < 6; ++j) val = val * 2 + (bits[i + j] - '0');
        out += static_cast<char>(val + 63);
    }
    return out;
}

} // namespace

TEST_CASE("parse_edge_list") {
    CHECK(parse_edge_list("3 2\n0 1\n1 2") == path(3));
    CHECK(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle(4));
    CHECK(parse_edge_list("# comment\n\n3 0\n") == edgeless(3));
    CHECK(parse_edge_list("2 1\n  0   1  \n") == complete(2));

    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 2"), "vertex id out of range at line 2",
                         InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("banana"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("2"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 x"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list("2 0\n0 1"), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list(""), InvalidInput);
}

TEST_CASE("write_edge_list canonical form") {
    CHECK(write_edge_list(path(3)) == "3 2\n0 1\n1 2\n");
    CHECK(write_edge_list(edgeless(3)) == "3 0\n");
    CHECK(write_edge_list(Graph::from_edge_list(0, {})) == "0 0\n");

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 14), rng);
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
}

TEST_CASE("all fixture files are canonical") {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(fixtures_dir())) {
        if (entry.path().extension() != ".el") continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        CHECK(write_edge_list(parse_edge_list(text)) == text);
        ++seen;
    }
    CHECK(seen >= 25);
}

TEST_CASE("graph6 codec") {
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("B?") == edgeless(3));
    CHECK(write_graph6(complete(3)) == "Bw");
    CHECK(parse_graph6("Bw\n") == complete(3));

    CHECK_THROWS_AS(parse_graph6(""), InvalidInput);
    CHECK_THROWS_AS(parse_graph6("B"), InvalidInput);   // truncated bit field
    CHECK_THROWS_AS(parse_graph6("Bw!"), InvalidInput); // '!' < 63
    CHECK_THROWS_AS(parse_graph6("Bww"), InvalidInput); // trailing data
    CHECK_THROWS_AS(parse_graph6("~??"), InvalidInput); // large-size header

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(static_cast<int>(rng() % 20), rng);
        std::string enc = write_graph6(g);
        CHECK(enc == reference_graph6(g));
        CHECK(parse_graph6(enc) == g);
    }
}

TEST_CASE("parse_weights") {
    WeightMap def = parse_weights("", 3);
    CHECK(def.scale() == 1);
    for (int v = 0; v < 3; ++v) CHECK(def.scaled(v) == 1);

    WeightMap one = parse_weights("1 10", 3);
    CHECK(one.scaled(0) == 1);
    CHECK(one.scaled(1) == 10);
    CHECK(one.scaled(2) == 1);

    CHECK_THROWS_WITH_AS(parse_weights("0 0", 3), "weight must be positive at line 1",
                         InvalidInput);
    CHECK_THROWS_AS(parse_weights("0 0.000", 3), InvalidInput);
    CHECK_THROWS_AS(parse_weights("0 1\n0 2", 3), InvalidInput);
    CHECK_THROWS_AS(parse_weights("5 1", 3), InvalidInput);
    CHECK_THROWS_AS(parse_weights("0 -1", 3), InvalidInput);
    CHECK_THROWS_AS(parse_weights("0 1e3", 3), InvalidInput);
}

TEST_CASE("decimal weights sum exactly") {
    std::string text;
    for (int v = 0; v < 10; ++v) text += std::to_string(v) + " 0.1\n";
    WeightMap w = parse_weights(text, 10);
    ExactWeight total = w.total(VertexSet::full(10));
    CHECK(total == ExactWeight::integer(1));
    CHECK(total.to_string() == "1");

    WeightMap mixed = parse_weights("0 2.5\n1 0.25", 2);
    CHECK(mixed.total(VertexSet{0, 1}).to_string() == "2.75");
    CHECK(mixed.weight(0).to_string() == "2.5");
    // comparisons are exact, not float-rounded
    CHECK(mixed.weight(1) < mixed.weight(0));
    CHECK(parse_weights("0 0.3", 1).weight(0) < parse_weights("0 0.31", 1).weight(0));
}
