#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romdom/families.hpp"
#include "romdom/labeling.hpp"

namespace romdom {

// Closed-form values for specific families, transcribed as published so they
// can be checked against the exact solver. Known-wrong cases are kept as-is;
// the verification harness is what reports where they disagree with truth.
enum class FormulaSource {
    published,  // stated with proof (or as a worked example)
    cited,      // quoted from earlier literature
};

const char* formula_source_name(FormulaSource s);

struct FormulaResult {
    long long value = 0;
    std::string case_label;  // which branch of the formula fired
    FormulaSource source = FormulaSource::published;
};

// gamma_{xkR}(K_n) = 2k for n >= k >= 1.
FormulaResult formula_complete(long long n, int k);

// gamma_{xkR}(K_{n,m}) for n >= m >= k-1 >= 1, four cases keyed on how m, n
// relate to k. The "exceptional-pair" branch covers (m,n) in
// {(k,k), (k,k+1), (k,k+2), (k+1,k+1)}.
bool bipartite_exceptional_pair(long long m, long long n, int k);
FormulaResult formula_complete_bipartite(long long n, long long m, int k);

// gamma_{xkR}(C_n), n >= 3, k <= 3.
FormulaResult formula_cycle(long long n, int k);

// gamma_{xkR}(P_n), k <= 2 (k = 2 needs n >= 2).
FormulaResult formula_path(long long n, int k);

// gamma_{xkR} of the wheel of order n >= 4 (hub + C_{n-1}), k <= 4.
FormulaResult formula_wheel(long long n, int k);

// gamma_{kR} (Roman k-domination) of the wheel of order n >= 4, any k >= 1.
FormulaResult formula_wheel_roman_k(long long n, int k);

// gamma_{x2R}(ell K_2) = 4*ell; the disjoint-K_2 graphs are exactly the
// graphs without isolated vertices whose value reaches 2n.
FormulaResult formula_ell_k2(long long ell, int k);

// gamma_{xkR} = 4k for K_{k,k} minus a (k-1)-matching, k >= 3.
FormulaResult formula_kkmm(int k);

// gamma_{xkR} = 2k+1 for the near-clique family ak:k,n (k >= 2, n >= k+1).
FormulaResult formula_ak(int k, long long n);

// Matches part sizes (any order) against the pattern forcing 2k+1 for a
// complete p-partite graph: exactly k-1 parts of size 1, smallest remaining
// part of size 2, p >= k >= 2. Returns nullopt when the pattern misses.
std::optional<FormulaResult> formula_multipartite(const std::vector<int>& parts, int k);

// Dispatches to the formula covering (spec, variant), if any.
// Throws InputError when no closed form is known for that combination.
FormulaResult formula_for(const FamilySpec& spec, const Variant& variant);

}  // namespace romdom
