#pragma once

#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Exact density value together with a vertex subset attaining it.
struct DensityWitness {
    Rational value;
    std::vector<int> witness; // sorted; empty only for the empty maximization
};

// m(G) = max over nonempty H of e(H)/v(H). Exact, via parametric min-cut.
DensityWitness m_density(const Graph& g);
DensityWitness m_density(const MultiGraph& g);

// m1(G) = max over H with v(H) >= 2 of e(H)/(v(H)-1). Requires v(G) >= 2.
DensityWitness m1_density(const Graph& g);
DensityWitness m1_density(const MultiGraph& g);

// m1(G,k) = max over H with v(H) >= k of e(H)/(v(H)-1); 0 with empty witness
// when no subgraph is large enough. Exact branch-and-bound; supported up to
// v(G) <= 24.
DensityWitness m1k_density(const Graph& g, int k);

// m2(F) = max over H with v(H) >= 3 of (e(H)-1)/(v(H)-2). Enumeration only;
// requires v(F) >= 3 and v(F) <= 20.
DensityWitness m2_density(const Graph& f);

// d(F) = min of the maximum degree over each side of the given bipartition.
int d_bipartite(const Graph& f, const std::vector<int>& side_a, const std::vector<int>& side_b);

// Detects a bipartition of f; returns false if f is not bipartite.
bool find_bipartition(const Graph& f, std::vector<int>& side_a, std::vector<int>& side_b);

int chromatic_number(const Graph& f, int size_limit = 16);
int clique_number(const Graph& f, int size_limit = 20);

// Enumeration oracles (independent of the flow/branch-and-bound paths above);
// exposed for cross-checking. Hard limit v(G) <= 24.
DensityWitness m_density_bruteforce(const Graph& g);
DensityWitness m1_density_bruteforce(const Graph& g);
DensityWitness m1k_density_bruteforce(const Graph& g, int k);
DensityWitness m2_density_bruteforce(const Graph& f);

} // namespace ramsey
