#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// Total r-coloring of the host's edges; colors[i] colors host.edges()[i].
struct EdgeColoring {
    Graph host;
    int r = 0;
    std::vector<int> colors;

    EdgeColoring() = default;
    EdgeColoring(Graph host, int r, std::vector<int> colors); // validates

    int color_of(int u, int v) const; // edge must exist
};

struct MonoWitness {
    int color = 0;
    std::vector<int> vertices; // embedded pattern copy, in embedding order
};

// A copy of F all of whose edges share one color, or nullopt.
std::optional<MonoWitness> find_mono_copy(const EdgeColoring& c, const PatternSpec& f);

struct RamseyVerdict {
    bool is_ramsey = false;
    std::optional<EdgeColoring> certificate; // good coloring when not Ramsey
    std::uint64_t nodes_searched = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

// Exhaustive check that every r-coloring of g contains a monochromatic f.
RamseyVerdict is_ramsey(const Graph& g, const PatternSpec& f, int r,
                        std::uint64_t budget = kDefaultSearchBudget);

// Degeneracy-order coloring in which every color class is (delta-1)-
// degenerate. Requires m(G) < (r(delta-1)+1)/2.
EdgeColoring greedy_backdegree_coloring(const Graph& g, int r, int delta);

// Backtracking search for an r-coloring of h with no monochromatic f;
// nullopt only when none exists. e(h) <= 28.
std::optional<EdgeColoring> ffree_coloring_small(const Graph& h, const PatternSpec& f, int r,
                                                 std::uint64_t budget = kDefaultSearchBudget);

// Partition engines; R is a valid Ramsey number for the target pattern and
// enters the m1(G, R) precondition. All outputs are self-certified.
EdgeColoring cycle_free_partition(const Graph& g, int l, int r, int R);
EdgeColoring biclique_free_partition(const Graph& g, int a, int b, int r, int R);
EdgeColoring path_free_partition(const Graph& g, int l, int r, int R);

// Star-coloring extraction from a path-free coloring of a gadget graph:
// a base k-subset A and s fiber vertices B of its fiber such that each of
// the k colors on G[A u B] forms a star centered at one vertex of A.
struct StarColoringWitness {
    std::vector<int> a;
    std::vector<int> b;
};

std::optional<StarColoringWitness> extract_star_coloring(const FiberedGraph& g,
                                                         const EdgeColoring& c, int l, int s);

} // namespace ramsey
