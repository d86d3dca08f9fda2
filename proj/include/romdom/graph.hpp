#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace romdom {

// Immutable finite simple graph on vertices 0..n-1.
//
// Adjacency is stored twice: as sorted neighbor lists (for iteration) and as
// per-vertex bit rows (for O(n/64) counting of |N(v) ∩ X| against a label
// mask, which is the hot operation of every solver in this project).
class Graph {
public:
    Graph() = default;  // the empty graph

    // Validates: endpoints in range, no self-loops, no duplicate edges
    // (in either orientation). Throws InputError.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Number of neighbors of v whose bit is set in mask (mask has
    // words_per_row() words).
    int count_neighbors_in(int v, const std::uint64_t* mask) const;

    int words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    // Subgraph induced by verts (need not be sorted; duplicates rejected).
    // Vertex i of the result corresponds to sorted(verts)[i].
    Graph induced(std::vector<int> verts) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;  // n_ rows of words_ words
};

}  // namespace romdom
