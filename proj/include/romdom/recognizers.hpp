#pragma once

#include <optional>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

// Looks for an s-clique S such that every vertex outside S is adjacent to all
// of S. Such an S exists iff the graph has at least s universal vertices
// (each member of S must be adjacent to everything else, inside S and out),
// so the witness returned is the s lowest-indexed universal vertices. G = K_s
// itself qualifies. Requires 1 <= s <= order.
std::optional<std::vector<int>> has_universal_clique(const Graph& g, int s);

struct AkWitness {
    std::vector<int> clique;  // S, sorted
    int extra;                // u
};

// Detects the structure behind minimum weight 2k+1: a k-clique S and a vertex
// u outside it with at least k-1 neighbors in S, such that every remaining
// vertex is adjacent to all of S, while no universal k-clique exists (that
// would allow weight 2k). Requires k >= 2 and order >= k+1. Returns the
// lexicographically least (S, u).
std::optional<AkWitness> is_ak_structure(const Graph& g, int k);

}  // namespace romdom
