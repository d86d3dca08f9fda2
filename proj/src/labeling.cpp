#include "romdom/labeling.hpp"

#include <sstream>

#include "romdom/errors.hpp"

namespace romdom {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::roman_ktuple: return "roman-ktuple";
        case Problem::roman_k: return "roman-k";
        case Problem::ktuple: return "ktuple";
        case Problem::ktuple_total: return "ktuple-total";
    }
    return "?";
}

Problem parse_problem(const std::string& name) {
    if (name == "roman-ktuple") return Problem::roman_ktuple;
    if (name == "roman-k") return Problem::roman_k;
    if (name == "ktuple") return Problem::ktuple;
    if (name == "ktuple-total") return Problem::ktuple_total;
    throw InputError("unknown variant '" + name +
                     "' (expected roman-ktuple, roman-k, ktuple or ktuple-total)");
}

int weight_of(const Labels& labels) {
    int w = 0;
    for (auto l : labels) w += l;
    return w;
}

std::vector<int> verts_with_label(const Labels& labels, int label) {
    std::vector<int> out;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == label) out.push_back(static_cast<int>(v));
    return out;
}

std::string describe(const Violation& v, const Variant& variant) {
    std::ostringstream out;
    if (is_roman(variant.problem)) {
        out << "vertex " << v.vertex << " (label " << v.label << ") has " << v.achieved
            << " neighbors labeled 2, needs " << v.required;
    } else {
        out << "vertex " << v.vertex << " has " << v.achieved << " set members in its "
            << (variant.problem == Problem::ktuple ? "closed" : "open") << " neighborhood, needs "
            << v.required;
    }
    return out.str();
}

std::vector<Violation> verify_labeling(const Graph& g, const Variant& variant, const Labels& labels) {
    if (!is_roman(variant.problem)) throw InputError("verify_labeling wants a Roman variant");
    if (variant.k < 1) throw InputError("k must be >= 1");
    if (static_cast<int>(labels.size()) != g.order())
        throw InputError("labeling covers " + std::to_string(labels.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    for (auto l : labels)
        if (l > 2) throw InputError("labels must be 0, 1 or 2");

    std::vector<std::uint64_t> two_mask(g.words_per_row(), 0);
    for (int v = 0; v < g.order(); ++v)
        if (labels[v] == 2) two_mask[v / 64] |= std::uint64_t{1} << (v % 64);

    std::vector<Violation> out;
    for (int v = 0; v < g.order(); ++v) {
        int required = labels[v] == 0 ? variant.k
                       : variant.problem == Problem::roman_ktuple ? variant.k - 1
                                                                  : 0;
        if (required == 0) continue;
        int got = g.count_neighbors_in(v, two_mask.data());
        if (got < required) out.push_back({v, labels[v], required, got});
    }
    return out;
}

std::vector<Violation> verify_set(const Graph& g, const Variant& variant,
                                  const std::vector<int>& set) {
    if (is_roman(variant.problem)) throw InputError("verify_set wants ktuple or ktuple-total");
    if (variant.k < 1) throw InputError("k must be >= 1");
    std::vector<char> member(g.order(), 0);
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    for (int v : set) {
        if (v < 0 || v >= g.order())
            throw InputError("set vertex " + std::to_string(v) + " out of range");
        if (member[v]) throw InputError("set lists vertex " + std::to_string(v) + " twice");
        member[v] = 1;
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    bool closed = variant.problem == Problem::ktuple;
    std::vector<Violation> out;
    for (int v = 0; v < g.order(); ++v) {
        int got = g.count_neighbors_in(v, mask.data()) + (closed && member[v] ? 1 : 0);
        if (got < variant.k) out.push_back({v, member[v] ? 1 : 0, variant.k, got});
    }
    return out;
}

}  // namespace romdom
