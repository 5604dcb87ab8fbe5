#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Result of repeatedly contracting maximal over-dense subgraphs until the
// remaining multigraph satisfies m1 <= r.
struct ContractionCertificate {
    VertexFamily family;   // vertex sets of the original graph, each with
                           // e(H)/(v(H)-1) > r
    MultiGraph contracted; // m1(contracted) <= r
    std::vector<int> vertex_map; // original vertex -> contracted vertex
    int r = 0;
};

// A vertex set H with e(H)/(v(H)-1) > r such that no proper superset keeps
// the strict inequality; nullopt when m1(G) <= r.
std::optional<std::vector<int>> find_maximal_dense(const Graph& g, int r);

ContractionCertificate contract_dense(const Graph& g, int r);

} // namespace ramsey
