#pragma once

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// Forbidden-pattern descriptor. Grammar for the textual form:
//   path:L | cycle:L | clique:L | biclique:A,B | file:PATH
struct PatternSpec {
    enum class Kind { Path, Cycle, Clique, Biclique, Explicit };

    Kind kind;
    int a = 0; // length / clique size / biclique side a
    int b = 0; // biclique side b
    Graph graph; // Explicit only

    static PatternSpec path(int l);
    static PatternSpec cycle(int l);
    static PatternSpec clique(int l);
    static PatternSpec biclique(int a, int b);
    static PatternSpec explicit_graph(Graph g);
    static PatternSpec parse(const std::string& text);

    // The pattern as a plain graph.
    Graph realize() const;
    int edge_count() const;
    std::string to_string() const;
};

} // namespace ramsey
