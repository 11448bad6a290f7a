#pragma once

#include <string>

#include "msc/graph.hpp"
#include "msc/weights.hpp"

namespace msc {

// Edge-list grammar: '#'-comment and blank lines are ignored; the first
// content line is "n m"; exactly m lines "u v" follow. Parse errors carry the
// offending line number.
Graph parse_edge_list(const std::string& text);

// Canonical form: header "n m", then edges with u < v sorted lexicographically,
// one per line, trailing newline. parse(write(g)) == g.
std::string write_edge_list(const Graph& g);

// graph6, header-less, single-byte size (n <= 62). Upper-triangle bits in
// column order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte, MSB first.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Weights grammar: '#'-comments; lines "v w" with w a positive decimal;
// unmentioned vertices default to 1. All weights land on one power-of-ten
// scale so later sums compare exactly.
WeightMap parse_weights(const std::string& text, int n);

} // namespace msc
