#include "romdom/graph_io.hpp"

#include <sstream>

#include "romdom/errors.hpp"

namespace romdom {
namespace {

bool blank_or_comment(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Parses exactly the integers asked for, rejecting trailing junk.
std::vector<long long> parse_ints(const std::string& line, std::size_t count, int line_no) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) throw ParseError("expected integers, got '" + line + "'", line_no);
    if (out.size() != count)
        throw ParseError("expected " + std::to_string(count) + " integers, got " +
                             std::to_string(out.size()),
                         line_no);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        if (n < 0) {
            auto hdr = parse_ints(line, 2, line_no);
            n = hdr[0];
            m = hdr[1];
            header_line = line_no;
            if (n < 0 || m < 0) throw ParseError("counts must be nonnegative", line_no);
            if (n > 1000000) throw ParseError("vertex count too large", line_no);
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError("more than the declared " + std::to_string(m) + " edges", line_no);
        auto uv = parse_ints(line, 2, line_no);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw ParseError("edge endpoint outside 0.." + std::to_string(n - 1), line_no);
        if (uv[0] == uv[1]) throw ParseError("self-loop at vertex " + std::to_string(uv[0]), line_no);
        int u = static_cast<int>(uv[0]), v = static_cast<int>(uv[1]);
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")",
                                 line_no);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("missing 'n m' header", line_no == 0 ? 1 : line_no);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " +
                             std::to_string(edges.size()),
                         header_line);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<std::uint8_t> parse_labeling(const std::string& text, int n, int max_label) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ';') c = '\n';
    std::istringstream in(normalized);
    std::string line;
    int line_no = 0;
    std::vector<int> seen(n, 0);
    std::vector<std::uint8_t> labels(n, 0);
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        auto vl = parse_ints(line, 2, line_no);
        if (vl[0] < 0 || vl[0] >= n)
            throw ParseError("vertex " + std::to_string(vl[0]) + " outside 0.." + std::to_string(n - 1),
                             line_no);
        if (vl[1] < 0 || vl[1] > max_label)
            throw ParseError("label " + std::to_string(vl[1]) + " outside 0.." +
                                 std::to_string(max_label),
                             line_no);
        int v = static_cast<int>(vl[0]);
        if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " labeled twice", line_no);
        seen[v] = 1;
        labels[v] = static_cast<std::uint8_t>(vl[1]);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " has no label");
    return labels;
}

std::string format_labeling(const std::vector<std::uint8_t>& labels) {
    std::ostringstream out;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (v) out << ';';
        out << v << ' ' << static_cast<int>(labels[v]);
    }
    return out.str();
}

}  // namespace romdom
