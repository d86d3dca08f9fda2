#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

// Edge-list text format:
//   line 1: "n m"
//   then exactly m lines "u v" with 0-based endpoints.
// Blank lines and lines starting with '#' are skipped. Malformed lines,
// out-of-range endpoints, self-loops and duplicate edges raise ParseError
// with the offending 1-based line number. "0 0" (the empty graph) is valid.
Graph parse_graph(const std::string& text);

// Canonical form: header, then edges as "u v" with u < v, sorted. Parsing the
// result reproduces the graph exactly.
std::string serialize_graph(const Graph& g);

// Labeling text: "vertex label" pairs separated by semicolons or newlines,
// e.g. "0 1;1 2;2 2". Every vertex of a graph of order n must appear exactly
// once; labels must lie in 0..max_label (2 for Roman labelings, 1 for set
// indicators). Returns the n labels indexed by vertex.
std::vector<std::uint8_t> parse_labeling(const std::string& text, int n, int max_label);

std::string format_labeling(const std::vector<std::uint8_t>& labels);

}  // namespace romdom
