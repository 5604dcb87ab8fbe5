#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/density.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Partition of the host's edge (multi)set into acyclic classes. For a
// multigraph, an edge of multiplicity m appears in m distinct classes.
struct ForestPartition {
    int n = 0;
    std::vector<std::vector<Edge>> classes;
};

struct Orientation {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // (from, to), one per edge instance
    std::vector<int> topo_order;           // empty unless globally acyclic
    int max_indegree = 0;
    bool globally_acyclic = false;
};

// Minimal forest partition; the class count equals ceil(m1(G)).
ForestPartition nash_williams(const Graph& g);
ForestPartition nash_williams(const MultiGraph& g);

// Splits an acyclic edge set on n vertices into two star forests (every
// component has diameter <= 2). Throws if the input is not a forest.
std::pair<std::vector<Edge>, std::vector<Edge>> split_into_star_forests(
    int n, const std::vector<Edge>& forest);

bool is_forest(int n, const std::vector<Edge>& edges);
bool is_star_forest(int n, const std::vector<Edge>& edges);

// Orientation with in-degree <= k; succeeds exactly when m1(G) <= k. The
// certificate is globally acyclic whenever the graph is k-degenerate; for
// the remaining feasible graphs it is derived from a forest partition
// (in-degree <= 1 per forest) and carries no topological order.
Orientation acyclic_orient(const Graph& g, int k);
Orientation acyclic_orient(const MultiGraph& g, int k);

// Exact minimum number of diameter-<=d forests partitioning E(G), by
// exhaustive search; v(G) <= 10 and e(G) <= 15. d < 0 means infinity and
// returns ceil(m1(G)).
int a_d_exact(const Graph& g, int d);

inline constexpr int kDiameterUnbounded = -1;

} // namespace ramsey
