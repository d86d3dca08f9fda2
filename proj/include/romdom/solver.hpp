#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/labeling.hpp"

namespace romdom {

enum class Engine {
    automatic,         // exhaustive for order <= 14, branch and bound above
    exhaustive,        // full enumeration in descending-degree order; the ground truth
    branch_and_bound,  // dynamic branching with lower-bound pruning
};

const char* engine_name(Engine e);
Engine parse_engine(const std::string& name);  // "auto" | "exhaustive" | "bb"

struct SolveOptions {
    Engine engine = Engine::automatic;
    std::uint64_t node_budget = 4'000'000'000ULL;
    double time_budget_ms = 0;  // 0 = none
};

struct SolveStats {
    std::uint64_t nodes = 0;    // search tree nodes, witness pass included
    double elapsed_ms = 0;
    std::string engine;
};

struct SolveResult {
    Variant variant{};
    int value = 0;
    // Roman variants: the full labeling. Set variants: 0/1 membership, with
    // the members repeated in `set` for convenience.
    Labels labels;
    std::vector<int> set;
    SolveStats stats;
};

// Exact optimum plus a deterministic witness: the lexicographically least
// optimal labeling (vertex 0 first, labels compared 0 < 1 < 2), identical for
// every engine. Degree preconditions are enforced up front (InfeasibleError);
// the empty graph solves to 0 for every variant. Throws ResourceError when a
// budget runs out, carrying the bounds proved so far.
SolveResult solve(const Graph& g, const Variant& variant, const SolveOptions& opts = {});

// Throws InfeasibleError iff the variant's minimum-degree precondition fails.
void check_feasible(const Graph& g, const Variant& variant);

// Visits every minimum-weight roman-ktuple labeling in lexicographic order.
// Return false from the visitor to stop early.
void for_each_optimal(const Graph& g, int k, const std::function<bool(const Labels&)>& visit,
                      const SolveOptions& opts = {});

struct EnumerateResult {
    int value = 0;
    std::vector<Labels> labelings;  // lexicographic order, possibly truncated
    bool truncated = false;
};

// Collects optimal roman-ktuple labelings up to cap; truncated reports
// whether more exist beyond the cap.
EnumerateResult enumerate_optimal(const Graph& g, int k, std::size_t cap = 1'000'000,
                                  const SolveOptions& opts = {});

// max |V2| over all optimal roman-ktuple labelings (exact; streams over the
// optima without storing them). For k >= 2 this is always >= k.
int n2_star(const Graph& g, int k, const SolveOptions& opts = {});

}  // namespace romdom
