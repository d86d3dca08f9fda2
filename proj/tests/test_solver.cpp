#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "romdom/errors.hpp"
#include "romdom/families.hpp"
#include "romdom/labeling.hpp"
#include "romdom/solver.hpp"

using namespace romdom;
using romdom::testing::naive_all_optimal;
using romdom::testing::naive_value;

namespace {

void check_witness(const Graph& g, const Variant& var, const SolveResult& r) {
    if (is_roman(var.problem)) {
        CHECK(verify_labeling(g, var, r.labels).empty());
        CHECK(weight_of(r.labels) == r.value);
    } else {
        CHECK(verify_set(g, var, r.set).empty());
        CHECK((int)r.set.size() == r.value);
        REQUIRE((int)r.labels.size() == g.order());
        std::vector<char> member(g.order(), 0);
        for (int v : r.set) member[v] = 1;
        for (int v = 0; v < g.order(); ++v) CHECK((int)r.labels[v] == (int)member[v]);
    }
}

int solve_both(const std::string& spec, Problem p, int k) {
    Graph g = generate(parse_spec(spec));
    Variant var{p, k};
    SolveOptions ex, bb;
    ex.engine = Engine::exhaustive;
    bb.engine = Engine::branch_and_bound;
    SolveResult b = solve(g, var, bb);
    check_witness(g, var, b);
    if (g.order() <= 13) {
        SolveResult e = solve(g, var, ex);
        CHECK(e.value == b.value);
        CHECK(e.labels == b.labels);  // witness pass is engine-independent
        check_witness(g, var, e);
    }
    return b.value;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((double)((rng() >> 11) * 0x1.0p-53) < p) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("known optima across the generated families") {
    struct Row {
        const char* spec;
        Problem p;
        int k, value;
    };
    const Row rows[] = {
        // heavier Roman counts
        {"complete:1", Problem::roman_ktuple, 1, 1},
        {"complete:4", Problem::roman_ktuple, 2, 4},
        {"complete:5", Problem::roman_ktuple, 3, 6},
        {"cycle:3", Problem::roman_ktuple, 2, 4},
        {"cycle:5", Problem::roman_ktuple, 2, 8},
        {"cycle:6", Problem::roman_ktuple, 2, 8},
        {"cycle:7", Problem::roman_ktuple, 2, 10},
        {"cycle:4", Problem::roman_ktuple, 3, 8},
        {"cycle:5", Problem::roman_ktuple, 3, 10},
        {"path:3", Problem::roman_ktuple, 2, 5},
        {"path:4", Problem::roman_ktuple, 2, 6},
        {"path:6", Problem::roman_ktuple, 2, 9},
        {"path:9", Problem::roman_ktuple, 2, 13},
        {"path:12", Problem::roman_ktuple, 2, 17},
        {"wheel:5", Problem::roman_ktuple, 2, 5},
        {"wheel:6", Problem::roman_ktuple, 2, 6},
        {"wheel:4", Problem::roman_ktuple, 3, 6},
        {"wheel:5", Problem::roman_ktuple, 3, 8},
        {"multipartite:1,2,3", Problem::roman_ktuple, 2, 5},
        {"multipartite:2,1", Problem::roman_ktuple, 2, 5},
        {"multipartite:2,2", Problem::roman_ktuple, 2, 6},
        {"multipartite:3,3", Problem::roman_ktuple, 2, 7},
        {"multipartite:4,4", Problem::roman_ktuple, 2, 8},
        {"multipartite:6,6", Problem::roman_ktuple, 2, 8},
        {"multipartite:2,2", Problem::roman_ktuple, 3, 8},
        {"multipartite:3,3", Problem::roman_ktuple, 3, 10},
        {"multipartite:4,4", Problem::roman_ktuple, 3, 11},
        {"multipartite:5,5", Problem::roman_ktuple, 3, 12},
        {"ellk2:1", Problem::roman_ktuple, 2, 4},
        {"ellk2:3", Problem::roman_ktuple, 2, 12},
        {"kkmm:3", Problem::roman_ktuple, 3, 12},
        {"ak:k=2,n=6", Problem::roman_ktuple, 2, 5},
        {"ak:k=3,n=7", Problem::roman_ktuple, 3, 7},
        {"corona(complete:2,complete:2)", Problem::roman_ktuple, 2, 8},
        {"corona(path:3,complete:2)", Problem::roman_ktuple, 2, 12},
        {"corona(path:3,complete:2)", Problem::roman_ktuple, 3, 18},
        {"corona(complete:2,cycle:4)", Problem::roman_ktuple, 2, 10},
        {"corona(complete:2,cycle:4)", Problem::roman_ktuple, 3, 16},
        // lighter Roman counts
        {"wheel:5", Problem::roman_k, 2, 4},
        {"wheel:8", Problem::roman_k, 1, 2},
        {"wheel:8", Problem::roman_k, 2, 7},
        {"wheel:8", Problem::roman_k, 5, 8},
        // set counts
        {"cycle:4", Problem::ktuple, 1, 2},
        {"cycle:4", Problem::ktuple, 2, 3},
        {"complete:5", Problem::ktuple, 2, 2},
        {"corona(complete:2,complete:2)", Problem::ktuple, 2, 4},
        {"corona(path:3,complete:2)", Problem::ktuple, 2, 6},
        {"corona(path:3,complete:2)", Problem::ktuple, 3, 9},
        {"corona(complete:2,cycle:4)", Problem::ktuple, 2, 6},
        {"corona(complete:2,cycle:4)", Problem::ktuple, 3, 8},
        {"cycle:4", Problem::ktuple_total, 1, 2},
        {"cycle:5", Problem::ktuple_total, 2, 5},
        {"complete:4", Problem::ktuple_total, 2, 3},
    };
    for (const auto& row : rows) {
        CAPTURE(row.spec);
        CAPTURE(row.k);
        CHECK(solve_both(row.spec, row.p, row.k) == row.value);
    }
}

TEST_CASE("larger instances handled by branch and bound") {
    CHECK(solve_both("path:24", Problem::roman_ktuple, 2) == 33);
    CHECK(solve_both("cycle:24", Problem::roman_ktuple, 2) == 32);
    CHECK(solve_both("wheel:13", Problem::roman_ktuple, 4) == 26);
    CHECK(solve_both("ellk2:8", Problem::roman_ktuple, 2) == 32);
    CHECK(solve_both("ak:k=3,n=16", Problem::roman_ktuple, 3) == 7);
}

TEST_CASE("both engines match the reference enumeration on random graphs") {
    std::mt19937_64 rng(20260823);
    const Variant vars[] = {
        {Problem::roman_ktuple, 1}, {Problem::roman_ktuple, 2}, {Problem::roman_ktuple, 3},
        {Problem::roman_k, 1},      {Problem::roman_k, 2},      {Problem::roman_k, 3},
        {Problem::ktuple, 1},       {Problem::ktuple, 2},       {Problem::ktuple, 3},
        {Problem::ktuple_total, 1}, {Problem::ktuple_total, 2},
    };
    int agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + (int)(rng() % 9);
        double p = 0.15 + 0.8 * (double)((rng() >> 11) * 0x1.0p-53);
        Graph g = random_graph(rng, n, p);
        for (const auto& var : vars) {
            auto truth = naive_value(g, var);
            for (Engine e : {Engine::exhaustive, Engine::branch_and_bound}) {
                SolveOptions o;
                o.engine = e;
                if (!truth) {
                    CHECK_THROWS_AS(solve(g, var, o), InfeasibleError);
                    continue;
                }
                SolveResult r = solve(g, var, o);
                CAPTURE(trial);
                CAPTURE(problem_name(var.problem));
                CAPTURE(var.k);
                CHECK(r.value == *truth);
                check_witness(g, var, r);
                ++agreements;
            }
        }
    }
    CHECK(agreements > 500);
}

TEST_CASE("every 5-vertex graph agrees with the reference") {
    for (unsigned bits = 0; bits < 1u << 10; ++bits) {
        std::vector<std::pair<int, int>> es;
        int b = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++b)
                if (bits >> b & 1) es.push_back({u, v});
        Graph g = Graph::from_edges(5, es);
        for (Variant var : {Variant{Problem::roman_ktuple, 2}, Variant{Problem::ktuple, 2}}) {
            auto truth = naive_value(g, var);
            for (Engine e : {Engine::exhaustive, Engine::branch_and_bound}) {
                SolveOptions o;
                o.engine = e;
                CAPTURE(bits);
                if (!truth) {
                    CHECK_THROWS_AS(solve(g, var, o), InfeasibleError);
                } else {
                    CHECK(solve(g, var, o).value == *truth);
                }
            }
        }
    }
}

TEST_CASE("witnesses are the lexicographically least optima") {
    CHECK(solve(make_cycle(6), {Problem::roman_ktuple, 2}).labels == Labels{0, 2, 2, 0, 2, 2});
    CHECK(solve(make_path(3), {Problem::roman_ktuple, 2}).labels == Labels{1, 2, 2});
    CHECK(solve(make_path(6), {Problem::roman_ktuple, 2}).labels == Labels{1, 2, 2, 0, 2, 2});
    CHECK(solve(make_complete(5), {Problem::roman_ktuple, 3}).labels == Labels{0, 0, 2, 2, 2});
    CHECK(solve(make_wheel(8), {Problem::roman_k, 1}).labels == Labels{2, 0, 0, 0, 0, 0, 0, 0});
    CHECK(solve(make_cycle(4), {Problem::ktuple, 1}).set == std::vector<int>{2, 3});
    CHECK(solve(make_cycle(4), {Problem::ktuple, 1}).labels == Labels{0, 0, 1, 1});

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + (int)(rng() % 6);
        Graph g = random_graph(rng, n, 0.55);
        for (Variant var : {Variant{Problem::roman_ktuple, 2}, Variant{Problem::roman_k, 2}}) {
            auto truth = naive_value(g, var);
            if (!truth) continue;
            SolveResult r = solve(g, var);
            CAPTURE(trial);
            CHECK(r.labels == naive_all_optimal(g, var, *truth).front());
        }
    }
}

TEST_CASE("solves are deterministic") {
    Graph g = generate(parse_spec("corona(complete:2,cycle:4)"));
    SolveResult a = solve(g, {Problem::roman_ktuple, 2});
    SolveResult b = solve(g, {Problem::roman_ktuple, 2});
    CHECK(a.value == b.value);
    CHECK(a.labels == b.labels);
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("optimal labelings enumerate in lexicographic order") {
    EnumerateResult c6 = enumerate_optimal(make_cycle(6), 2);
    CHECK(c6.value == 8);
    CHECK(!c6.truncated);
    CHECK(c6.labelings == std::vector<Labels>{
                              {0, 2, 2, 0, 2, 2}, {2, 0, 2, 2, 0, 2}, {2, 2, 0, 2, 2, 0}});

    EnumerateResult k3 = enumerate_optimal(make_complete(3), 1);
    CHECK(k3.value == 2);
    CHECK(k3.labelings == std::vector<Labels>{{0, 0, 2}, {0, 2, 0}, {2, 0, 0}});

    EnumerateResult p3 = enumerate_optimal(make_path(3), 2);
    CHECK(p3.labelings == std::vector<Labels>{{1, 2, 2}, {2, 2, 1}});

    EnumerateResult capped = enumerate_optimal(make_cycle(6), 2, 2);
    CHECK(capped.truncated);
    CHECK(capped.labelings == std::vector<Labels>{{0, 2, 2, 0, 2, 2}, {2, 0, 2, 2, 0, 2}});

    EnumerateResult empty = enumerate_optimal(Graph{}, 2);
    CHECK(empty.value == 0);
    CHECK(empty.labelings == std::vector<Labels>{{}});
    CHECK(!empty.truncated);

    int seen = 0;
    for_each_optimal(make_cycle(6), 2, [&](const Labels& f) {
        CHECK(f == Labels{0, 2, 2, 0, 2, 2});
        ++seen;
        return false;  // stop after the first
    });
    CHECK(seen == 1);
}

TEST_CASE("heaviest-label count over all optima") {
    CHECK(n2_star(make_cycle(6), 2) == 4);
    CHECK(n2_star(make_path(3), 2) == 2);
    CHECK(n2_star(make_complete(5), 3) == 3);
    CHECK(n2_star(make_ell_k2(2), 2) == 4);
    CHECK(n2_star(make_complete(1), 1) == 0);  // the single optimum has no 2 at all
}

TEST_CASE("degree preconditions produce infeasibility errors") {
    CHECK_THROWS_AS(solve(make_path(3), {Problem::ktuple_total, 2}), InfeasibleError);
    CHECK_THROWS_AS(solve(make_path(3), {Problem::roman_ktuple, 3}), InfeasibleError);
    CHECK_THROWS_AS(solve(make_complete(3), {Problem::roman_ktuple, 4}), InfeasibleError);

    Graph edgeless = make_multipartite({5});
    CHECK_THROWS_AS(solve(edgeless, {Problem::roman_ktuple, 2}), InfeasibleError);
    CHECK(solve(edgeless, {Problem::roman_k, 3}).value == 5);  // all ones
    CHECK(solve(edgeless, {Problem::ktuple, 1}).value == 5);   // closed neighborhoods saturate

    CHECK_THROWS_AS(solve(make_path(3), {Problem::roman_ktuple, 0}), InputError);
    CHECK_THROWS_AS(solve(make_path(3), {Problem::ktuple, -2}), InputError);
}

TEST_CASE("the empty graph solves to zero everywhere") {
    for (Problem p : {Problem::roman_ktuple, Problem::roman_k, Problem::ktuple, Problem::ktuple_total}) {
        SolveResult r = solve(Graph{}, {p, 2});
        CHECK(r.value == 0);
        CHECK(r.labels.empty());
        CHECK(r.set.empty());
    }
}

TEST_CASE("node budgets stop the search with honest bounds") {
    SolveOptions o;
    o.engine = Engine::branch_and_bound;
    o.node_budget = 50;
    try {
        solve(make_cycle(20), {Problem::roman_ktuple, 2}, o);
        FAIL("expected the budget to run out");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("node budget") != std::string::npos);
        CHECK(e.lower_bound >= 4);
        CHECK(e.lower_bound <= 28);  // true optimum sits between the bounds
        CHECK(e.upper_bound >= 28);
        CHECK(e.upper_bound <= 40);
    }
}

TEST_CASE("time budgets stop the search") {
    SolveOptions o;
    o.engine = Engine::branch_and_bound;
    o.time_budget_ms = 1e-6;
    CHECK_THROWS_AS(solve(make_path(40), {Problem::roman_ktuple, 2}, o), ResourceError);
}

TEST_CASE("oversized graphs are refused up front") {
    try {
        solve(make_path(5000), {Problem::roman_ktuple, 1});
        FAIL("expected a size refusal");
    } catch (const ResourceError& e) {
        CHECK(e.upper_bound == 10000);
        CHECK(e.lower_bound >= 1000);
    }
}

TEST_CASE("engine selection") {
    CHECK(parse_engine("auto") == Engine::automatic);
    CHECK(parse_engine("exhaustive") == Engine::exhaustive);
    CHECK(parse_engine("bb") == Engine::branch_and_bound);
    CHECK_THROWS_AS(parse_engine("fast"), InputError);

    CHECK(solve(make_path(8), {Problem::roman_ktuple, 2}).stats.engine == "exhaustive");
    CHECK(solve(make_path(16), {Problem::roman_ktuple, 2}).stats.engine == "bb");
    SolveOptions o;
    o.engine = Engine::branch_and_bound;
    SolveResult r = solve(make_path(8), {Problem::roman_ktuple, 2}, o);
    CHECK(r.stats.engine == "bb");
    CHECK(r.stats.nodes > 0);
    CHECK(r.stats.elapsed_ms >= 0);
}

TEST_CASE("paired complete bipartite and near-matching values for larger k") {
    // spot values beyond the hand-frozen tables, cross-checked in place
    Graph kk5 = make_kkmm(5);
    auto truth = naive_value(kk5, {Problem::roman_ktuple, 5});
    REQUIRE(truth.has_value());
    CHECK(*truth == 20);
    CHECK(solve_both("kkmm:5", Problem::roman_ktuple, 5) == 20);
}
