#include "romdom/families.hpp"

#include <fstream>
#include <sstream>

#include "romdom/errors.hpp"
#include "romdom/graph_io.hpp"

namespace romdom {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

// --- spec string parsing ------------------------------------------------

struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit SpecParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("bad family spec '" + s + "': " + msg);
    }

    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-'))
            ++pos;
        if (pos == start) fail("expected a family name at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }

    int number() {
        std::size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number at position " + std::to_string(pos));
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) fail("parameter too large");
        }
        return static_cast<int>(v);
    }

    std::vector<int> number_list() {
        std::vector<int> out{number()};
        while (eat(',')) out.push_back(number());
        return out;
    }

    FamilySpec parse() {
        FamilySpec spec;
        std::string name = ident();
        if (name == "corona" || name == "kjoin" || name == "starjoin") {
            spec.kind = name == "corona"    ? FamilySpec::Kind::corona
                        : name == "kjoin"   ? FamilySpec::Kind::kjoin
                                            : FamilySpec::Kind::starjoin;
            if (!eat('(')) fail(name + " needs '(' arguments");
            spec.operands.push_back(parse());
            if (!eat(',')) fail(name + " needs two operands");
            spec.operands.push_back(parse());
            if (name == "kjoin") {
                if (!eat(',')) fail("kjoin needs a third argument k");
                // accept both "2" and "k=2"
                if (s.compare(pos, 2, "k=") == 0) pos += 2;
                spec.params.push_back(number());
            }
            if (!eat(')')) fail("missing ')'");
            return spec;
        }
        if (!eat(':')) fail("'" + name + "' needs ':' parameters");
        if (name == "file") {
            spec.kind = FamilySpec::Kind::file;
            spec.path = s.substr(pos);
            pos = s.size();
            if (spec.path.empty()) fail("file: needs a path");
            return spec;
        }
        if (name == "complete" || name == "path" || name == "cycle" || name == "wheel" ||
            name == "ellk2" || name == "kkmm") {
            spec.kind = name == "complete" ? FamilySpec::Kind::complete
                        : name == "path"   ? FamilySpec::Kind::path
                        : name == "cycle"  ? FamilySpec::Kind::cycle
                        : name == "wheel"  ? FamilySpec::Kind::wheel
                        : name == "ellk2"  ? FamilySpec::Kind::ellk2
                                           : FamilySpec::Kind::kkmm;
            spec.params.push_back(number());
            return spec;
        }
        if (name == "multipartite" || name == "bipartite") {
            spec.kind = FamilySpec::Kind::multipartite;
            spec.params = number_list();
            if (name == "bipartite" && spec.params.size() != 2) fail("bipartite takes exactly two sizes");
            return spec;
        }
        if (name == "ak") {
            spec.kind = FamilySpec::Kind::ak;
            if (s.compare(pos, 2, "k=") != 0) fail("ak needs k=...,n=...");
            pos += 2;
            spec.params.push_back(number());
            if (!eat(',') || s.compare(pos, 2, "n=") != 0) fail("ak needs k=...,n=...");
            pos += 2;
            spec.params.push_back(number());
            return spec;
        }
        fail("unknown family '" + name + "'");
    }
};

Graph complete_between(int n, const std::vector<std::pair<int, int>>& blocks) {
    // helper: all edges between distinct index blocks [a,b)
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (int u = blocks[i].first; u < blocks[i].second; ++u)
                for (int v = blocks[j].first; v < blocks[j].second; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

}  // namespace

FamilySpec parse_spec(const std::string& text) {
    SpecParser p(text);
    FamilySpec spec = p.parse();
    if (p.pos != text.size()) p.fail("trailing characters at position " + std::to_string(p.pos));
    return spec;
}

std::string format_spec(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    std::ostringstream out;
    auto list = [&out](const std::vector<int>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    };
    switch (spec.kind) {
        case K::complete: out << "complete:"; list(spec.params); break;
        case K::path: out << "path:"; list(spec.params); break;
        case K::cycle: out << "cycle:"; list(spec.params); break;
        case K::wheel: out << "wheel:"; list(spec.params); break;
        case K::multipartite: out << "multipartite:"; list(spec.params); break;
        case K::ellk2: out << "ellk2:"; list(spec.params); break;
        case K::kkmm: out << "kkmm:"; list(spec.params); break;
        case K::ak: out << "ak:k=" << spec.params.at(0) << ",n=" << spec.params.at(1); break;
        case K::corona:
            out << "corona(" << format_spec(spec.operands.at(0)) << ','
                << format_spec(spec.operands.at(1)) << ')';
            break;
        case K::starjoin:
            out << "starjoin(" << format_spec(spec.operands.at(0)) << ','
                << format_spec(spec.operands.at(1)) << ')';
            break;
        case K::kjoin:
            out << "kjoin(" << format_spec(spec.operands.at(0)) << ','
                << format_spec(spec.operands.at(1)) << ',' << spec.params.at(0) << ')';
            break;
        case K::file: out << "file:" << spec.path; break;
    }
    return out.str();
}

Graph make_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, es);
}

Graph make_wheel(int n) {
    require(n >= 4, "wheel needs n >= 4");
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) {
        es.emplace_back(0, v);
        es.emplace_back(v, v == n - 1 ? 1 : v + 1);
    }
    return Graph::from_edges(n, es);
}

Graph make_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "multipartite needs at least one part");
    int n = 0;
    std::vector<std::pair<int, int>> blocks;
    for (int p : parts) {
        require(p >= 1, "multipartite part sizes must be >= 1");
        blocks.emplace_back(n, n + p);
        n += p;
    }
    return complete_between(n, blocks);
}

Graph make_ell_k2(int ell) {
    require(ell >= 1, "ellk2 needs ell >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < ell; ++i) es.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edges(2 * ell, es);
}

Graph make_ak(int k, int n) {
    require(k >= 1, "ak needs k >= 1");
    require(n >= k + 1, "ak needs n >= k+1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v)
            if (!(u == k - 1 && v == k)) es.emplace_back(u, v);
    for (int v = k + 1; v < n; ++v)
        for (int u = 0; u < k; ++u) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph make_kkmm(int k) {
    require(k >= 1, "kkmm needs k >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (!(u == v && u < k - 1)) es.emplace_back(u, k + v);
    return Graph::from_edges(2 * k, es);
}

Graph corona(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    require(ng >= 1 && nh >= 1, "corona needs nonempty operands");
    std::vector<std::pair<int, int>> es = g.edges();
    for (int i = 0; i < ng; ++i) {
        int base = ng + i * nh;
        for (auto [u, v] : h.edges()) es.emplace_back(base + u, base + v);
        for (int w = 0; w < nh; ++w) es.emplace_back(i, base + w);
    }
    return Graph::from_edges(ng + ng * nh, es);
}

Graph k_join(const Graph& g, const Graph& h, int k) {
    require(k >= 1, "kjoin needs k >= 1");
    require(h.order() >= k, "kjoin needs |V(h)| >= k");
    std::vector<int> first_k(k);
    for (int i = 0; i < k; ++i) first_k[i] = i;
    return k_join(g, h, k, std::vector<std::vector<int>>(g.order(), first_k));
}

Graph k_join(const Graph& g, const Graph& h, int k, const std::vector<std::vector<int>>& links) {
    int ng = g.order(), nh = h.order();
    require(k >= 1, "kjoin needs k >= 1");
    require(nh >= k, "kjoin needs |V(h)| >= k");
    require(static_cast<int>(links.size()) == ng, "kjoin links must cover every g-vertex");
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u) {
        std::vector<int> seen(nh, 0);
        int distinct = 0;
        for (int w : links[u]) {
            require(w >= 0 && w < nh, "kjoin link target out of range");
            if (!seen[w]) {
                seen[w] = 1;
                ++distinct;
                es.emplace_back(u, ng + w);
            }
        }
        require(distinct >= k, "kjoin needs >= k link targets per g-vertex");
    }
    return Graph::from_edges(ng + nh, es);
}

Graph star_join(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int w = 0; w < nh; ++w) es.emplace_back(u, ng + w);
    return Graph::from_edges(ng + nh, es);
}

Graph generate(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::complete: return make_complete(spec.params.at(0));
        case K::path: return make_path(spec.params.at(0));
        case K::cycle: return make_cycle(spec.params.at(0));
        case K::wheel: return make_wheel(spec.params.at(0));
        case K::multipartite: return make_multipartite(spec.params);
        case K::ellk2: return make_ell_k2(spec.params.at(0));
        case K::ak: return make_ak(spec.params.at(0), spec.params.at(1));
        case K::kkmm: return make_kkmm(spec.params.at(0));
        case K::corona: return corona(generate(spec.operands.at(0)), generate(spec.operands.at(1)));
        case K::kjoin:
            return k_join(generate(spec.operands.at(0)), generate(spec.operands.at(1)),
                          spec.params.at(0));
        case K::starjoin:
            return star_join(generate(spec.operands.at(0)), generate(spec.operands.at(1)));
        case K::file: {
            std::ifstream in(spec.path);
            if (!in) throw InputError("cannot open graph file '" + spec.path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_graph(buf.str());
        }
    }
    throw InputError("unhandled family kind");
}

}  // namespace romdom
