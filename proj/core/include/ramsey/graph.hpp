#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using Edge = std::pair<int, int>; // normalized u < v

// Simple undirected graph on dense vertex ids 0..n-1, no loops, no parallel
// edges. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int e() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adj() const { return adj_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Loopless multigraph; multiplicities are stored explicitly per vertex pair.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, std::map<Edge, int> mult);
    explicit MultiGraph(const Graph& g);

    int n() const { return n_; }
    int e() const { return e_; } // counted with multiplicity
    const std::map<Edge, int>& mult() const { return mult_; }
    int multiplicity(int u, int v) const;

private:
    int n_ = 0;
    int e_ = 0;
    std::map<Edge, int> mult_;
};

// Pairwise-disjoint nonempty vertex subsets of a host graph.
class VertexFamily {
public:
    VertexFamily() = default;
    VertexFamily(int host_n, std::vector<std::vector<int>> sets);

    const std::vector<std::vector<int>>& sets() const { return sets_; }
    bool empty() const { return sets_.empty(); }
    std::size_t size() const { return sets_.size(); }

private:
    std::vector<std::vector<int>> sets_; // each sorted
};

Graph build_complete(int l);
Graph build_complete_bipartite(int a, int b);
Graph build_path(int l);  // l edges, l+1 vertices
Graph build_cycle(int l); // l >= 3
Graph build_star(int l);  // l rays, center is vertex 0

// family-id one of: complete L | complete-bipartite A B | path L | cycle L | star L
Graph build_named(const std::string& family, const std::vector<int>& params);

// The 5-cycle with a dangling edge attached to every vertex: C5 on 0..4,
// pendant edge {i, i+5} for i = 0..4.
Graph p3_witness();

struct InducedSubgraph {
    Graph graph;
    std::vector<int> relabel; // new id -> original id (sorted)
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct Contraction {
    MultiGraph contracted;
    std::vector<int> vertex_map; // original vertex -> contracted vertex
};
Contraction contract_family(const Graph& g, const VertexFamily& family);
Contraction contract_family(const MultiGraph& g, const VertexFamily& family);

struct DegeneracyOrder {
    std::vector<int> order; // v1..vn; back-degree of order[i] into order[0..i] <= degeneracy
    int degeneracy;
};
DegeneracyOrder degeneracy_order(const Graph& g);

} // namespace ramsey
