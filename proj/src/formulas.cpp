#include "romdom/formulas.hpp"

#include <algorithm>
#include <string>

#include "romdom/errors.hpp"

namespace romdom {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

FormulaResult made(long long value, const char* label, FormulaSource src) {
    return FormulaResult{value, label, src};
}

[[noreturn]] void no_formula(const std::string& what) {
    throw InputError("no closed-form value known for " + what);
}

}  // namespace

const char* formula_source_name(FormulaSource s) {
    return s == FormulaSource::published ? "published" : "cited";
}

FormulaResult formula_complete(long long n, int k) {
    if (k < 1 || n < k) throw InputError("complete-graph formula needs n >= k >= 1");
    return made(2LL * k, "2k", FormulaSource::published);
}

bool bipartite_exceptional_pair(long long m, long long n, int k) {
    if (m == k) return n == k || n == k + 1 || n == k + 2;
    return m == k + 1 && n == k + 1;
}

FormulaResult formula_complete_bipartite(long long n, long long m, int k) {
    if (k < 2 || m < k - 1 || n < m)
        throw InputError("complete-bipartite formula needs n >= m >= k-1 >= 1");
    if (n == m && m == k - 1) return made(2 * m + 2 * n, "n=m=k-1", FormulaSource::published);
    if (m == k - 1) return made(2 * m + n, "n>m=k-1", FormulaSource::published);
    if (bipartite_exceptional_pair(m, n, k))
        return made(m + n + 2 * k - 2, "exceptional-pair", FormulaSource::published);
    return made(4LL * k, "4k", FormulaSource::published);
}

FormulaResult formula_cycle(long long n, int k) {
    if (n < 3) throw InputError("cycle formula needs n >= 3");
    switch (k) {
        case 1: return made(ceil_div(2 * n, 3), "ceil(2n/3)", FormulaSource::cited);
        case 2: return made(2 * ceil_div(2 * n, 3), "2*ceil(2n/3)", FormulaSource::published);
        case 3: return made(2 * n, "2n", FormulaSource::published);
        default: no_formula("cycles with k=" + std::to_string(k));
    }
}

FormulaResult formula_path(long long n, int k) {
    if (n < 1) throw InputError("path formula needs n >= 1");
    if (k == 1) return made(ceil_div(2 * n, 3), "ceil(2n/3)", FormulaSource::cited);
    if (k == 2) {
        if (n < 2) throw InputError("path formula with k=2 needs n >= 2");
        long long base = 2 * ceil_div(2 * n, 3);
        if (n % 3 != 0) return made(base, "2*ceil(2n/3)", FormulaSource::published);
        if (n == 3) return made(base + 1, "2*ceil(2n/3)+1", FormulaSource::published);
        return made(base + 2, "2*ceil(2n/3)+2", FormulaSource::published);
    }
    no_formula("paths with k=" + std::to_string(k));
}

FormulaResult formula_wheel(long long n, int k) {
    if (n < 4) throw InputError("wheel formula needs order n >= 4");
    switch (k) {
        case 1: return made(2, "2", FormulaSource::published);
        case 2:
            return made(ceil_div(2 * (n - 1), 3) + 2, "ceil(2(n-1)/3)+2",
                        FormulaSource::published);
        case 3:
            if (n % 3 == 2)
                return made(4 * ceil_div(n - 1, 3), "4*ceil((n-1)/3)", FormulaSource::published);
            return made(4 * ceil_div(n - 1, 3) + 2, "4*ceil((n-1)/3)+2",
                        FormulaSource::published);
        case 4: return made(2 * n, "2n", FormulaSource::published);
        default: no_formula("wheels with k=" + std::to_string(k));
    }
}

FormulaResult formula_wheel_roman_k(long long n, int k) {
    if (n < 4) throw InputError("wheel formula needs order n >= 4");
    if (k < 1) throw InputError("wheel formula needs k >= 1");
    if (k == 1) return made(2, "2", FormulaSource::cited);
    if (k == 2) return made(ceil_div(2 * (n - 1), 3) + 2, "ceil(2(n-1)/3)+2", FormulaSource::cited);
    return made(n, "n", FormulaSource::cited);
}

FormulaResult formula_ell_k2(long long ell, int k) {
    if (ell < 1) throw InputError("disjoint-K2 formula needs ell >= 1");
    if (k != 2) no_formula("disjoint K2 copies with k=" + std::to_string(k));
    return made(4 * ell, "2n", FormulaSource::published);
}

FormulaResult formula_kkmm(int k) {
    if (k < 3) no_formula("K_{k,k} minus a near-perfect matching with k=" + std::to_string(k));
    return made(4LL * k, "4k", FormulaSource::published);
}

FormulaResult formula_ak(int k, long long n) {
    if (k < 2 || n < k + 1) throw InputError("near-clique formula needs k >= 2 and n >= k+1");
    return made(2LL * k + 1, "2k+1", FormulaSource::published);
}

std::optional<FormulaResult> formula_multipartite(const std::vector<int>& parts, int k) {
    if (k < 2 || (int)parts.size() < k) return std::nullopt;
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) return std::nullopt;
    long long ones = std::count(sorted.begin(), sorted.end(), 1);
    if (ones != k - 1 || sorted[k - 1] != 2) return std::nullopt;
    return made(2LL * k + 1, "2k+1", FormulaSource::published);
}

FormulaResult formula_for(const FamilySpec& spec, const Variant& variant) {
    const int k = variant.k;
    const std::string what = std::string(problem_name(variant.problem)) + " k=" +
                             std::to_string(k) + " on " + format_spec(spec);
    if (variant.problem == Problem::roman_k) {
        if (spec.kind == FamilySpec::Kind::wheel) return formula_wheel_roman_k(spec.params[0], k);
        no_formula(what);
    }
    if (variant.problem != Problem::roman_ktuple) no_formula(what);
    switch (spec.kind) {
        case FamilySpec::Kind::complete: return formula_complete(spec.params[0], k);
        case FamilySpec::Kind::cycle: return formula_cycle(spec.params[0], k);
        case FamilySpec::Kind::path: return formula_path(spec.params[0], k);
        case FamilySpec::Kind::wheel: return formula_wheel(spec.params[0], k);
        case FamilySpec::Kind::multipartite: {
            if (spec.params.size() == 2) {
                long long n = std::max(spec.params[0], spec.params[1]);
                long long m = std::min(spec.params[0], spec.params[1]);
                if (k >= 2 && m >= k - 1) return formula_complete_bipartite(n, m, k);
                no_formula(what);
            }
            if (auto r = formula_multipartite(spec.params, k)) return *r;
            no_formula(what);
        }
        case FamilySpec::Kind::ellk2: return formula_ell_k2(spec.params[0], k);
        case FamilySpec::Kind::kkmm:
            if (spec.params[0] == k) return formula_kkmm(k);
            no_formula(what);
        case FamilySpec::Kind::ak:
            if (spec.params[0] == k) return formula_ak(k, spec.params[1]);
            no_formula(what);
        default: no_formula(what);
    }
}

}  // namespace romdom
