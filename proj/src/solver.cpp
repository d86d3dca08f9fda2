#include "romdom/solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>

#include "romdom/errors.hpp"

namespace romdom {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::automatic: return "auto";
        case Engine::exhaustive: return "exhaustive";
        case Engine::branch_and_bound: return "bb";
    }
    return "?";
}

Engine parse_engine(const std::string& name) {
    if (name == "auto") return Engine::automatic;
    if (name == "exhaustive") return Engine::exhaustive;
    if (name == "bb" || name == "branch-and-bound") return Engine::branch_and_bound;
    throw InputError("unknown engine '" + name + "' (expected auto, exhaustive, or bb)");
}

void check_feasible(const Graph& g, const Variant& variant) {
    if (variant.k < 1) throw InputError("k must be >= 1");
    if (g.order() == 0) return;
    int need = 0;
    switch (variant.problem) {
        case Problem::roman_ktuple:
        case Problem::ktuple: need = variant.k - 1; break;
        case Problem::roman_k: need = 0; break;
        case Problem::ktuple_total: need = variant.k; break;
    }
    if (g.min_degree() < need)
        throw InfeasibleError(std::string(problem_name(variant.problem)) + " with k=" +
                              std::to_string(variant.k) + " needs minimum degree >= " +
                              std::to_string(need) + ", graph has " + std::to_string(g.min_degree()));
}

namespace {

using Clock = std::chrono::steady_clock;

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Linear-relaxation lower bound from the degree-sum count of label-2 (resp.
// member) endpoints seen across all neighborhoods. Safe for any instance that
// passed the feasibility check.
int root_lower_bound(const Graph& g, const Variant& var) {
    int n = g.order();
    if (n == 0) return 0;
    int dmax = g.max_degree();
    int k = var.k;
    long long lb = 0;
    switch (var.problem) {
        case Problem::roman_ktuple:
            // every vertex needs k-1 (or k if labeled 0) twos among neighbors
            lb = dmax >= 2 ? ceil_div(2LL * k * n, dmax + 1) : (long long)k * n;
            if (k >= 2) lb = std::max(lb, 2LL * k);  // V2 induces min degree k-1
            break;
        case Problem::roman_k:
            lb = dmax >= k ? ceil_div(2LL * k * n, dmax + k) : (long long)n;
            break;
        case Problem::ktuple:
            lb = std::max((long long)k, ceil_div((long long)k * n, dmax + 1));
            break;
        case Problem::ktuple_total:
            lb = std::max((long long)k + 1, ceil_div((long long)k * n, dmax));
            break;
    }
    return (int)std::min(lb, 2LL * n);
}

struct Budget {
    std::uint64_t limit;
    std::uint64_t nodes = 0;
    Clock::time_point deadline{};
    bool timed = false;
    bool node_overrun = false;

    explicit Budget(const SolveOptions& o) : limit(o.node_budget) {
        if (o.time_budget_ms > 0) {
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double, std::milli>(o.time_budget_ms));
            timed = true;
        }
    }
    bool spent() {
        ++nodes;
        if (nodes > limit) {
            node_overrun = true;
            return true;
        }
        return timed && (nodes & 0xfffu) == 0 && Clock::now() >= deadline;
    }
};

[[noreturn]] void overrun(const Budget& b, long long lower, long long upper) {
    throw ResourceError(b.node_overrun ? "node budget exhausted" : "time budget exhausted",
                        lower, upper);
}

// Search state for the Roman variants. Counters twos/undec track, per vertex,
// how many neighbors are already labeled 2 and how many are still undecided,
// so every cut is a certainty ("this vertex can never be satisfied"), never a
// heuristic: no valid completion is ever pruned.
struct RomanCore {
    const Graph& g;
    int n, k, min_need;   // min_need: twos required next to a nonzero vertex
    bool v2_atleast_k;    // any valid labeling has >= k twos (k >= 2 tuple mode)
    Budget& budget;
    std::vector<int8_t> label;  // -1 undecided, else 0/1/2
    std::vector<int> twos, undec, order;
    int weight = 0, ntwo = 0, decided = 0;
    int best, root_lb;
    bool stop = false;

    RomanCore(const Graph& g_, Problem p, int k_, Budget& b)
        : g(g_), n(g_.order()), k(k_), min_need(p == Problem::roman_ktuple ? k_ - 1 : 0),
          v2_atleast_k(p == Problem::roman_ktuple && k_ >= 2),
          budget(b), label(n, -1), twos(n, 0), undec(n), best(2 * n) {
        for (int v = 0; v < n; ++v) undec[v] = g.degree(v);
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int c) { return g.degree(a) > g.degree(c); });
        root_lb = root_lower_bound(g, {p, k});
    }

    void assign(int v, int two_delta, int L) {
        label[v] = (int8_t)L;
        weight += L;
        ntwo += two_delta;
        ++decided;
        for (int u : g.neighbors(v)) {
            --undec[u];
            twos[u] += two_delta;
        }
    }
    void unassign(int v, int two_delta, int L) {
        label[v] = -1;
        weight -= L;
        ntwo -= two_delta;
        --decided;
        for (int u : g.neighbors(v)) {
            ++undec[u];
            twos[u] -= two_delta;
        }
    }

    // need k twos when labeled 0, min_need otherwise or while undecided
    bool vertex_ok(int u) const {
        int want = label[u] == 0 ? k : min_need;
        return twos[u] + undec[u] >= want;
    }
    bool local_ok(int v) const {
        if (!vertex_ok(v)) return false;
        for (int u : g.neighbors(v)) {
            if (!vertex_ok(u)) return false;
        }
        return true;
    }

    // 2 * (twos still missing somewhere) is owed by any completion
    int remaining_lb() const {
        int def = v2_atleast_k ? k - ntwo : 0;
        for (int u = 0; u < n; ++u) {
            int want = label[u] == 0 ? k : min_need;
            if (want - twos[u] > def) def = want - twos[u];
        }
        return def > 0 ? 2 * def : 0;
    }

    void note_leaf() {
        if (weight < best) best = weight;
        if (best <= root_lb) stop = true;
    }

    void run_exhaustive(int idx = 0) {
        if (idx == n) {
            note_leaf();
            return;
        }
        int v = order[idx];
        for (int L = 0; L <= 2; ++L) {
            if (weight + L >= best) break;  // ascending labels: later ones no better
            if (budget.spent()) overrun(budget, root_lb, best);
            assign(v, L == 2, L);
            if (local_ok(v)) run_exhaustive(idx + 1);
            unassign(v, L == 2, L);
            if (stop) return;
        }
    }

    void run_bnb() {
        if (decided == n) {
            note_leaf();
            return;
        }
        if (weight + remaining_lb() >= best) return;
        // branch on the vertex with the fewest labels still open; every
        // undecided vertex can take 1 or 2 unless dead, so counts are 0/2/3
        int pick = -1, pick_cnt = 4;
        for (int v = 0; v < n; ++v) {
            if (label[v] >= 0) continue;
            int avail = twos[v] + undec[v];
            if (avail < min_need) return;  // no label fits: dead branch
            int cnt = (avail >= k ? 1 : 0) + 2;
            if (cnt < pick_cnt) {
                pick_cnt = cnt;
                pick = v;
            }
        }
        int avail = twos[pick] + undec[pick];
        static constexpr int try_order[3] = {2, 0, 1};  // incumbent improvements first
        for (int L : try_order) {
            if (weight + L >= best) continue;
            if (L == 0 && avail < k) continue;
            if (budget.spent()) overrun(budget, root_lb, best);
            assign(pick, L == 2, L);
            if (local_ok(pick)) run_bnb();
            unassign(pick, L == 2, L);
            if (stop) return;
        }
    }

    // First leaf reached in vertex-index order with ascending labels is the
    // lexicographically least labeling of weight `value`; admissible pruning
    // keeps it reachable.
    bool lex_witness(int v, int value, Labels& out) {
        if (v == n) {
            out.assign(label.begin(), label.end());
            return true;
        }
        for (int L = 0; L <= 2; ++L) {
            if (weight + L > value) break;
            if (budget.spent()) overrun(budget, value, value);
            assign(v, L == 2, L);
            bool ok = local_ok(v) && weight + remaining_lb() <= value;
            bool hit = ok && lex_witness(v + 1, value, out);
            unassign(v, L == 2, L);
            if (hit) return true;
        }
        return false;
    }

    // Visits every leaf of weight exactly `value` (all of them, in
    // lexicographic order) until the visitor declines. Returns false on stop.
    bool lex_enum(int v, int value, const std::function<bool(const Labels&)>& visit) {
        if (v == n) {
            Labels cur(label.begin(), label.end());
            return visit(cur);
        }
        for (int L = 0; L <= 2; ++L) {
            if (weight + L > value) break;
            if (budget.spent()) overrun(budget, value, value);
            assign(v, L == 2, L);
            bool ok = local_ok(v) && weight + remaining_lb() <= value;
            bool keep = !ok || lex_enum(v + 1, value, visit);
            unassign(v, L == 2, L);
            if (!keep) return false;
        }
        return true;
    }
};

// Same machinery for the plain set variants; membership is 0/1 and the
// neighborhood is closed for ktuple, open for ktuple-total.
struct SetCore {
    const Graph& g;
    int n, k;
    bool closed;
    Budget& budget;
    std::vector<int8_t> state;  // -1 undecided, 0 out, 1 in
    std::vector<int> have, undec, order;
    int size = 0, decided = 0;
    int best, root_lb;
    bool stop = false;

    SetCore(const Graph& g_, Problem p, int k_, Budget& b)
        : g(g_), n(g_.order()), k(k_), closed(p == Problem::ktuple),
          budget(b), state(n, -1), have(n, 0), undec(n), best(n) {
        for (int v = 0; v < n; ++v) undec[v] = g.degree(v) + (closed ? 1 : 0);
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int c) { return g.degree(a) > g.degree(c); });
        root_lb = root_lower_bound(g, {p, k});
    }

    void assign(int v, int L) {
        state[v] = (int8_t)L;
        size += L;
        ++decided;
        for (int u : g.neighbors(v)) {
            --undec[u];
            have[u] += L;
        }
        if (closed) {
            --undec[v];
            have[v] += L;
        }
    }
    void unassign(int v, int L) {
        state[v] = -1;
        size -= L;
        --decided;
        for (int u : g.neighbors(v)) {
            ++undec[u];
            have[u] -= L;
        }
        if (closed) {
            ++undec[v];
            have[v] -= L;
        }
    }

    bool vertex_ok(int u) const { return have[u] + undec[u] >= k; }
    bool local_ok(int v) const {
        if (!vertex_ok(v)) return false;
        for (int u : g.neighbors(v)) {
            if (!vertex_ok(u)) return false;
        }
        return true;
    }

    int remaining_lb() const {
        int def = 0;
        for (int u = 0; u < n; ++u) {
            if (k - have[u] > def) def = k - have[u];
        }
        return def > 0 ? def : 0;
    }

    void note_leaf() {
        if (size < best) best = size;
        if (best <= root_lb) stop = true;
    }

    void run_exhaustive(int idx = 0) {
        if (idx == n) {
            note_leaf();
            return;
        }
        int v = order[idx];
        for (int L = 0; L <= 1; ++L) {
            if (size + L >= best) break;
            if (budget.spent()) overrun(budget, root_lb, best);
            assign(v, L);
            if (local_ok(v)) run_exhaustive(idx + 1);
            unassign(v, L);
            if (stop) return;
        }
    }

    void run_bnb() {
        if (decided == n) {
            note_leaf();
            return;
        }
        if (size + remaining_lb() >= best) return;
        int pick = -1, pick_avail = INT_MAX;  // tightest constraint first
        for (int v = 0; v < n; ++v) {
            if (state[v] >= 0) continue;
            int avail = have[v] + undec[v];
            if (avail < k) return;
            if (avail < pick_avail) {
                pick_avail = avail;
                pick = v;
            }
        }
        for (int L = 0; L <= 1; ++L) {
            if (size + L >= best) break;
            if (budget.spent()) overrun(budget, root_lb, best);
            assign(pick, L);
            if (local_ok(pick)) run_bnb();
            unassign(pick, L);
            if (stop) return;
        }
    }

    bool lex_witness(int v, int value, Labels& out) {
        if (v == n) {
            out.assign(state.begin(), state.end());
            return true;
        }
        for (int L = 0; L <= 1; ++L) {
            if (size + L > value) break;
            if (budget.spent()) overrun(budget, value, value);
            assign(v, L);
            bool ok = local_ok(v) && size + remaining_lb() <= value;
            bool hit = ok && lex_witness(v + 1, value, out);
            unassign(v, L);
            if (hit) return true;
        }
        return false;
    }
};

Engine resolve(Engine e, int n) {
    if (e != Engine::automatic) return e;
    return n <= 14 ? Engine::exhaustive : Engine::branch_and_bound;
}

constexpr int kMaxSearchOrder = 4096;

void check_search_size(const Graph& g, const Variant& var) {
    int n = g.order();
    if (n > kMaxSearchOrder)
        throw ResourceError("graph order " + std::to_string(n) +
                                " exceeds the exact-search limit of " +
                                std::to_string(kMaxSearchOrder),
                            root_lower_bound(g, var),
                            is_roman(var.problem) ? 2LL * n : (long long)n);
}

}  // namespace

SolveResult solve(const Graph& g, const Variant& variant, const SolveOptions& opts) {
    check_feasible(g, variant);
    check_search_size(g, variant);
    auto t0 = Clock::now();
    Budget budget(opts);
    int n = g.order();
    Engine eng = resolve(opts.engine, n);

    SolveResult res;
    res.variant = variant;
    res.stats.engine = engine_name(eng);
    if (is_roman(variant.problem)) {
        RomanCore core(g, variant.problem, variant.k, budget);
        if (eng == Engine::exhaustive)
            core.run_exhaustive();
        else
            core.run_bnb();
        res.value = core.best;
        RomanCore wit(g, variant.problem, variant.k, budget);
        if (n > 0 && !wit.lex_witness(0, res.value, res.labels))
            throw std::logic_error("witness pass found no labeling at the optimum");
    } else {
        SetCore core(g, variant.problem, variant.k, budget);
        if (eng == Engine::exhaustive)
            core.run_exhaustive();
        else
            core.run_bnb();
        res.value = core.best;
        SetCore wit(g, variant.problem, variant.k, budget);
        if (n > 0 && !wit.lex_witness(0, res.value, res.labels))
            throw std::logic_error("witness pass found no set at the optimum");
        for (int v = 0; v < n; ++v) {
            if (res.labels[v]) res.set.push_back(v);
        }
    }
    if (n == 0) res.labels.clear();
    res.stats.nodes = budget.nodes;
    res.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

namespace {

void visit_optima(const Graph& g, int k, int value,
                  const std::function<bool(const Labels&)>& visit, const SolveOptions& opts) {
    if (g.order() == 0) {
        Labels empty;
        visit(empty);
        return;
    }
    Budget budget(opts);
    RomanCore core(g, Problem::roman_ktuple, k, budget);
    core.lex_enum(0, value, visit);
}

}  // namespace

void for_each_optimal(const Graph& g, int k, const std::function<bool(const Labels&)>& visit,
                      const SolveOptions& opts) {
    int value = solve(g, {Problem::roman_ktuple, k}, opts).value;
    visit_optima(g, k, value, visit, opts);
}

EnumerateResult enumerate_optimal(const Graph& g, int k, std::size_t cap,
                                  const SolveOptions& opts) {
    EnumerateResult out;
    out.value = solve(g, {Problem::roman_ktuple, k}, opts).value;
    visit_optima(
        g, k, out.value,
        [&](const Labels& f) {
            if (out.labelings.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.labelings.push_back(f);
            return true;
        },
        opts);
    return out;
}

int n2_star(const Graph& g, int k, const SolveOptions& opts) {
    int top = 0;
    int value = solve(g, {Problem::roman_ktuple, k}, opts).value;
    visit_optima(
        g, k, value,
        [&](const Labels& f) {
            int c = 0;
            for (auto x : f) c += x == 2;
            if (c > top) top = c;
            return true;
        },
        opts);
    return top;
}

}  // namespace romdom
