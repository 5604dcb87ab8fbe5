#include "ramsey/pattern.hpp"

#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/io.hpp"

namespace ramsey {

PatternSpec PatternSpec::path(int l) {
    if (l < 1) throw std::invalid_argument("pattern path: length must be >= 1");
    return {Kind::Path, l, 0, {}};
}

PatternSpec PatternSpec::cycle(int l) {
    if (l < 3) throw std::invalid_argument("pattern cycle: length must be >= 3");
    return {Kind::Cycle, l, 0, {}};
}

PatternSpec PatternSpec::clique(int l) {
    if (l < 2) throw std::invalid_argument("pattern clique: size must be >= 2");
    return {Kind::Clique, l, 0, {}};
}

PatternSpec PatternSpec::biclique(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("pattern biclique: sides must be >= 1");
    return {Kind::Biclique, a, b, {}};
}

PatternSpec PatternSpec::explicit_graph(Graph g) {
    if (g.n() > 10) throw SizeLimitError("explicit patterns limited to 10 vertices");
    if (g.e() == 0) throw std::invalid_argument("pattern: explicit graph needs at least one edge");
    return {Kind::Explicit, 0, 0, std::move(g)};
}

PatternSpec PatternSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("pattern: expected kind:args in '" + text + "'");
    std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError("pattern: bad integer '" + s + "' in '" + text + "'");
        }
    };
    if (kind == "path") return path(to_int(args));
    if (kind == "cycle") return cycle(to_int(args));
    if (kind == "clique") return clique(to_int(args));
    if (kind == "biclique") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw ParseError("pattern: biclique needs A,B");
        return biclique(to_int(args.substr(0, comma)), to_int(args.substr(comma + 1)));
    }
    if (kind == "file") return explicit_graph(read_edge_list_file(args));
    throw ParseError("pattern: unknown kind '" + kind + "'");
}

Graph PatternSpec::realize() const {
    switch (kind) {
        case Kind::Path: return build_path(a);
        case Kind::Cycle: return build_cycle(a);
        case Kind::Clique: return build_complete(a);
        case Kind::Biclique: return build_complete_bipartite(a, b);
        case Kind::Explicit: return graph;
    }
    throw std::logic_error("pattern: bad kind");
}

int PatternSpec::edge_count() const {
    switch (kind) {
        case Kind::Path: return a;
        case Kind::Cycle: return a;
        case Kind::Clique: return a * (a - 1) / 2;
        case Kind::Biclique: return a * b;
        case Kind::Explicit: return graph.e();
    }
    throw std::logic_error("pattern: bad kind");
}

std::string PatternSpec::to_string() const {
    switch (kind) {
        case Kind::Path: return "path:" + std::to_string(a);
        case Kind::Cycle: return "cycle:" + std::to_string(a);
        case Kind::Clique: return "clique:" + std::to_string(a);
        case Kind::Biclique: return "biclique:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::Explicit:
            return "explicit(" + std::to_string(graph.n()) + "v," + std::to_string(graph.e()) +
                   "e)";
    }
    throw std::logic_error("pattern: bad kind");
}

} // namespace ramsey
