#pragma once

#include <utility>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Bipartite gadget graph: base vertices 0..n-1 plus, for every k-subset A of
// the base (lexicographic order) and every copy index in 0..m-1, one fiber
// vertex adjacent exactly to A.
struct FiberedGraph {
    Graph graph;
    int n = 0, k = 0, m = 0;
    // fiber index: (sorted k-subset of base vertices, its m fiber vertex ids)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> fibers;
};

FiberedGraph build_gnkm(int n, int k, int m);

// Exact densest-subgraph value of the gadget; throws std::logic_error unless
// it is < k.
Rational gnkm_density_check(const FiberedGraph& g);

// Parameters (n, m) for the gadget used by the path construction: n is the
// generalized Ramsey number for r paths of length ceil(l/2) plus K_k taken
// from the table (upper entry), m = C(r,k) * k! * s.
std::pair<long long, long long> paths_parameters(int l, int k, int r, long long s,
                                                 const RamseyTable& table);

// Recursive gluing of gadget graphs: level 1 is build_gnkm(n[0], k, m[0]);
// at each later level every fiber of the previous level hosts a glued copy
// of build_gnkm(m[i-1], k, m[i]) identified with that fiber's vertex set.
struct GStarGraph {
    Graph graph;
    int l = 0, k = 0, r = 0;
    std::vector<int> n_seq, s_seq, m_seq;
    bool canonical = true; // false when the s-sequence ties were relaxed
    // per level, the fiber vertex sets hosting the next level's glued copies
    std::vector<std::vector<std::vector<int>>> levels;
};

// Sequences must have length ceil(l/2); unless relax is set, the ties
// s[0] = (k+1)*n[1], s[i] = n[i+1] for middle i, s[last] = 1 are enforced
// (for a single level only s[0] = 1 is required).
GStarGraph build_gstar(int l, int k, int r, const std::vector<int>& n_seq,
                       const std::vector<int>& s_seq, const std::vector<int>& m_seq,
                       bool relax = false);

// K_{p,q} with p = r(a-1)+1 and q = r(b-1)*C(p,a)+1.
Graph kpq_witness(int a, int b, int r);

// ceil((1 - 1/ceil(l/2))*r + 1/ceil(l/2)).
int gstar_k_formula(int l, int r);

} // namespace ramsey
