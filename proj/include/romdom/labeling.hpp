#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

// The four exactly-solved problems. k is carried alongside as Variant.
//
//   roman_ktuple  labels {0,1,2}; a 0-vertex needs >= k neighbors labeled 2,
//                 a nonzero vertex needs >= k-1 (defined when min degree >= k-1)
//   roman_k       labels {0,1,2}; only 0-vertices are constrained (>= k twos)
//   ktuple        set S with |N[v] ∩ S| >= k for every v (min degree >= k-1)
//   ktuple_total  set S with |N(v) ∩ S| >= k for every v (min degree >= k)
enum class Problem { roman_ktuple, roman_k, ktuple, ktuple_total };

struct Variant {
    Problem problem;
    int k;
};

inline bool is_roman(Problem p) { return p == Problem::roman_ktuple || p == Problem::roman_k; }

const char* problem_name(Problem p);
Problem parse_problem(const std::string& name);  // "roman-ktuple" etc.

using Labels = std::vector<std::uint8_t>;

int weight_of(const Labels& labels);
std::vector<int> verts_with_label(const Labels& labels, int label);

// One unmet neighborhood demand. For set problems label is 1/0 membership.
struct Violation {
    int vertex;
    int label;
    int required;  // twos (or set members) demanded in the relevant neighborhood
    int achieved;
};

std::string describe(const Violation& v, const Variant& variant);

// Labels must cover every vertex with values in {0,1,2}; variant must be a
// Roman one. Returns every vertex whose demand is unmet (empty = valid).
std::vector<Violation> verify_labeling(const Graph& g, const Variant& variant, const Labels& labels);

// set lists vertices (any order, duplicates rejected); variant must be ktuple
// or ktuple_total.
std::vector<Violation> verify_set(const Graph& g, const Variant& variant,
                                  const std::vector<int>& set);

}  // namespace romdom
