#pragma once

#include <string>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

// A parsed family-spec string. Grammar (case-sensitive, no spaces required):
//   complete:N | path:N | cycle:N | wheel:N | ellk2:L | kkmm:K
//   multipartite:N1,N2,...   (bipartite:N,M is accepted sugar)
//   ak:k=K,n=N
//   corona(SPEC,SPEC) | starjoin(SPEC,SPEC) | kjoin(SPEC,SPEC,K)
//   file:PATH
// format_spec() emits the canonical spelling; parse(format(s)) == s.
struct FamilySpec {
    enum class Kind {
        complete,
        path,
        cycle,
        wheel,
        multipartite,
        ellk2,
        ak,
        kkmm,
        corona,
        kjoin,
        starjoin,
        file,
    };
    Kind kind{};
    std::vector<int> params;          // sizes; ak uses {k, n}; kjoin uses {k}
    std::vector<FamilySpec> operands; // two for corona/kjoin/starjoin
    std::string path;                 // file kind only

    bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_spec(const std::string& text);
std::string format_spec(const FamilySpec& spec);

// Builds the graph. Size parameters must be >= 1; cycles need n >= 3, wheels
// n >= 4, ak needs n >= k+1. file specs read and parse the referenced path.
// Vertex numbering conventions are fixed and documented per generator below.
Graph generate(const FamilySpec& spec);

// K_n on 0..n-1.
Graph make_complete(int n);
// Path 0-1-...-(n-1).
Graph make_path(int n);
// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph make_cycle(int n);
// Wheel of order n >= 4: hub 0 (degree n-1) plus rim cycle 1..n-1.
Graph make_wheel(int n);
// Complete multipartite; parts occupy consecutive index blocks in the given
// order. A single part yields an edgeless graph.
Graph make_multipartite(const std::vector<int>& parts);
// ell disjoint copies of K_2: edges (0,1), (2,3), ...
Graph make_ell_k2(int ell);
// Order-n graph (n >= k+1): vertices 0..k induce K_{k+1} minus the edge
// (k-1,k); every vertex >= k+1 is adjacent to exactly 0..k-1.
Graph make_ak(int k, int n);
// K_{k,k} with parts {0..k-1}, {k..2k-1}, minus the matching (i, k+i) for
// i < k-1.
Graph make_kkmm(int k);

// Corona: g's vertices keep their ids; copy i of h occupies
// [n_g + i*n_h, n_g + (i+1)*n_h) and every copy vertex is joined to i.
Graph corona(const Graph& g, const Graph& h);

// Disjoint union (g first) plus, for each vertex u of g, edges to the
// h-vertices listed in links[u] (h's own indexing). Default links join every
// g-vertex to h's vertices 0..k-1. Each link set needs >= k distinct vertices.
Graph k_join(const Graph& g, const Graph& h, int k);
Graph k_join(const Graph& g, const Graph& h, int k, const std::vector<std::vector<int>>& links);

// Disjoint union (g first) plus all g-h edges.
Graph star_join(const Graph& g, const Graph& h);

}  // namespace romdom
