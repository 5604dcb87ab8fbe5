#include "ramsey/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ramsey/color.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t want, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError("line " + std::to_string(lineno) + ": trailing junk '" + rest + "'");
    if (out.size() != want)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(want) +
                         " integers");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("empty edge-list input");
    auto hdr = parse_ints(line, 2, lineno);
    long long n = hdr[0], e = hdr[1];
    if (n < 0 || e < 0) throw ParseError("negative header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(e));
    for (long long i = 0; i < e; ++i) {
        if (!next_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(e) + " edges, got " + std::to_string(i));
        auto uv = parse_ints(line, 2, lineno);
        if (uv[0] >= uv[1])
            throw ParseError("line " + std::to_string(lineno) + ": edges require u < v");
        edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.e() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    write_edge_list(out, g);
    if (!out) throw ParseError("cannot write '" + path + "'");
}

void write_multigraph(std::ostream& out, const MultiGraph& g) {
    out << g.n() << ' ' << g.mult().size() << '\n';
    for (const auto& [e, m] : g.mult()) out << e.first << ' ' << e.second << ' ' << m << '\n';
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
    out << c.host.n() << ' ' << c.host.e() << ' ' << c.r << '\n';
    for (std::size_t i = 0; i < c.colors.size(); ++i)
        out << c.host.edges()[i].first << ' ' << c.host.edges()[i].second << ' ' << c.colors[i]
            << '\n';
}

EdgeColoring read_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("empty coloring input");
    auto hdr = parse_ints(line, 3, lineno);
    long long n = hdr[0], e = hdr[1], r = hdr[2];
    if (n < 0 || e < 0 || r < 1) throw ParseError("bad coloring header");
    std::vector<Edge> edges;
    std::vector<int> colors;
    for (long long i = 0; i < e; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError("truncated coloring");
        auto uvc = parse_ints(line, 3, lineno);
        edges.push_back({static_cast<int>(uvc[0]), static_cast<int>(uvc[1])});
        colors.push_back(static_cast<int>(uvc[2]));
    }
    try {
        Graph g(static_cast<int>(n), edges);
        // reorder colors to the graph's canonical edge order
        std::vector<int> ordered(g.e());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(), edges[i]);
            ordered[static_cast<std::size_t>(it - g.edges().begin())] = colors[i];
        }
        return EdgeColoring(std::move(g), static_cast<int>(r), std::move(ordered));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

EdgeColoring read_coloring_file(const std::string& path) {
    auto in = open_input(path);
    return read_coloring(in);
}

void write_coloring_file(const std::string& path, const EdgeColoring& c) {
    std::ofstream out(path);
    write_coloring(out, c);
    if (!out) throw ParseError("cannot write '" + path + "'");
}

} // namespace ramsey
