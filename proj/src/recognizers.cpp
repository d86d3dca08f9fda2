#include "romdom/recognizers.hpp"

#include "romdom/errors.hpp"

namespace romdom {
namespace {

// Lexicographic k-subset successor over 0..n-1; returns false when exhausted.
bool next_subset(std::vector<int>& sub, int n) {
    int k = static_cast<int>(sub.size());
    for (int i = k - 1; i >= 0; --i) {
        if (sub[i] < n - (k - i)) {
            ++sub[i];
            for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> has_universal_clique(const Graph& g, int s) {
    if (s < 1 || s > g.order()) throw InputError("clique size must be in 1..order");
    std::vector<int> out;
    for (int v = 0; v < g.order() && static_cast<int>(out.size()) < s; ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    if (static_cast<int>(out.size()) < s) return std::nullopt;
    return out;
}

std::optional<AkWitness> is_ak_structure(const Graph& g, int k) {
    if (k < 2) throw InputError("ak structure needs k >= 2");
    int n = g.order();
    if (n < k + 1) return std::nullopt;
    if (has_universal_clique(g, k)) return std::nullopt;

    std::vector<int> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = i;
    do {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k && clique; ++j)
                if (!g.adjacent(sub[i], sub[j])) clique = false;
        if (!clique) continue;
        std::vector<char> in_s(n, 0);
        for (int v : sub) in_s[v] = 1;
        // outside vertices adjacent to all of S; at most one exception, which
        // must still reach k-1 members of S
        for (int u = 0; u < n; ++u) {
            if (in_s[u]) continue;
            int hits = 0;
            for (int v : sub) hits += g.adjacent(u, v);
            if (hits < k - 1) continue;
            bool rest_ok = true;
            for (int w = 0; w < n && rest_ok; ++w) {
                if (in_s[w] || w == u) continue;
                for (int v : sub)
                    if (!g.adjacent(w, v)) {
                        rest_ok = false;
                        break;
                    }
            }
            if (rest_ok) return AkWitness{sub, u};
        }
    } while (next_subset(sub, n));
    return std::nullopt;
}

}  // namespace romdom
