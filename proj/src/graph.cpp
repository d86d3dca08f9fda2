#include "romdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "romdom/errors.hpp"

namespace romdom {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 0 : (n + 63) / 64;
    g.adj_.assign(n, {});
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.bits_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        g.bits_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        ++g.m_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::min_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = v == 0 ? degree(v) : std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::count_neighbors_in(int v, const std::uint64_t* mask) const {
    const std::uint64_t* r = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w] & mask[w]);
    return c;
}

Graph Graph::induced(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= n_)
            throw InputError("induced: vertex " + std::to_string(verts[i]) + " out of range");
        if (i > 0 && verts[i] == verts[i - 1])
            throw InputError("induced: duplicate vertex " + std::to_string(verts[i]));
    }
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int v : adj_[u])
            if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return from_edges(static_cast<int>(verts.size()), es);
}

}  // namespace romdom
