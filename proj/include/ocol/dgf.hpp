// DGF text format.
//   line 1:  "<order> <arc-count>"  (plus the token "undirected" for edge lists)
//   then exactly arc-count lines "<tail> <head>", 0-indexed.
// Lines starting with '#' are comments; a trailing newline is optional.
// Colouring certificates: one "<vertex> <colour>" line per vertex, sorted.
#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocol/colouring.hpp"
#include "ocol/digraph.hpp"

namespace ocol {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct UndirectedGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted

    int degree(int v) const {
        int d = 0;
        for (auto [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }
    int max_degree() const {
        int m = 0;
        for (int v = 0; v < order; ++v) m = std::max(m, degree(v));
        return m;
    }
};

namespace detail {

struct DgfLine {
    int number;
    std::string text;
};

inline std::vector<DgfLine> content_lines(const std::string& text) {
    std::vector<DgfLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(start, end - start + 1)});
    }
    return out;
}

inline std::vector<long long> parse_ints(const DgfLine& l, int expected, bool* undirected_flag = nullptr) {
    std::istringstream in(l.text);
    std::vector<long long> vals;
    std::string tok;
    while (in >> tok) {
        if (undirected_flag && tok == "undirected") {
            *undirected_flag = true;
            continue;
        }
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(l.number, "expected integer, got '" + tok + "'");
        }
    }
    if (static_cast<int>(vals.size()) != expected)
        throw ParseError(l.number, "expected " + std::to_string(expected) + " fields");
    return vals;
}

} // namespace detail

inline OrientedGraph parse_dgf(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header");
    bool undirected = false;
    auto header = detail::parse_ints(lines[0], 2, &undirected);
    if (undirected) throw ParseError(lines[0].number, "undirected input where an oriented graph is required");
    long long order = header[0], count = header[1];
    if (order < 0 || count < 0) throw ParseError(lines[0].number, "negative header field");
    if (static_cast<long long>(lines.size()) - 1 != count)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "arc count " + std::to_string(count) + " does not match " +
                             std::to_string(lines.size() - 1) + " arc lines");
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto v = detail::parse_ints(lines[i], 2);
        Arc a{static_cast<int>(v[0]), static_cast<int>(v[1])};
        if (a.tail < 0 || a.tail >= order || a.head < 0 || a.head >= order)
            throw ParseError(lines[i].number, "vertex index out of range");
        if (a.tail == a.head) throw ParseError(lines[i].number, "loop");
        for (Arc b : arcs) {
            if (b == a) throw ParseError(lines[i].number, "duplicate arc");
            if (b.tail == a.head && b.head == a.tail)
                throw ParseError(lines[i].number, "2-cycle with earlier arc");
        }
        arcs.push_back(a);
    }
    return OrientedGraph(static_cast<int>(order), std::move(arcs));
}

inline std::string serialize_dgf(const OrientedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.arc_count() << '\n';
    for (Arc a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

inline UndirectedGraph parse_dgf_undirected(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header");
    bool undirected = false;
    auto header = detail::parse_ints(lines[0], 2, &undirected);
    if (!undirected) throw ParseError(lines[0].number, "missing 'undirected' header flag");
    long long order = header[0], count = header[1];
    if (order < 0 || count < 0) throw ParseError(lines[0].number, "negative header field");
    if (static_cast<long long>(lines.size()) - 1 != count)
        throw ParseError(lines.empty() ? 1 : lines.back().number, "edge count does not match edge lines");
    UndirectedGraph g;
    g.order = static_cast<int>(order);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto v = detail::parse_ints(lines[i], 2);
        int a = static_cast<int>(v[0]), b = static_cast<int>(v[1]);
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw ParseError(lines[i].number, "vertex index out of range");
        if (a == b) throw ParseError(lines[i].number, "loop");
        auto e = std::minmax(a, b);
        for (auto f : g.edges)
            if (f == std::pair<int, int>(e.first, e.second))
                throw ParseError(lines[i].number, "duplicate edge");
        g.edges.push_back({e.first, e.second});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline std::string serialize_dgf_undirected(const UndirectedGraph& g) {
    std::ostringstream out;
    out << g.order << ' ' << g.edges.size() << " undirected\n";
    for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
    return out.str();
}

// --- colouring / witness certificates --------------------------------------

struct ParsedCertificate {
    Colouring colouring;
    std::optional<std::string> method; // from a "# method: <tag>" header, if present
};

inline std::string serialize_colouring(const Colouring& c, const std::optional<std::string>& method = {}) {
    std::ostringstream out;
    if (method) out << "# method: " << *method << '\n';
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        out << v << ' ' << c.assignment[v] << '\n';
    return out.str();
}

inline ParsedCertificate parse_colouring(const std::string& text, int expected_order) {
    ParsedCertificate cert;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            const std::string tag = "# method: ";
            if (line.rfind(tag, 0) == 0) cert.method = line.substr(tag.size());
        }
    }
    auto lines = detail::content_lines(text);
    std::vector<int> assignment(expected_order, -1);
    for (const auto& l : lines) {
        auto v = detail::parse_ints(l, 2);
        int vertex = static_cast<int>(v[0]), colour = static_cast<int>(v[1]);
        if (vertex < 0 || vertex >= expected_order) throw ParseError(l.number, "vertex index out of range");
        if (colour < 0) throw ParseError(l.number, "negative colour");
        if (assignment[vertex] >= 0) throw ParseError(l.number, "vertex coloured twice");
        assignment[vertex] = colour;
    }
    for (int v = 0; v < expected_order; ++v)
        if (assignment[v] < 0)
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                             "vertex " + std::to_string(v) + " has no colour");
    cert.colouring = make_colouring(std::move(assignment));
    return cert;
}

} // namespace ocol
