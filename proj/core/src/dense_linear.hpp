#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey::detail {

struct WeightedEdge {
    int u, v;
    std::int64_t mult;
};

// Maximize (sum of w_e*mult over edges inside S) - w_v*|S| over vertex sets
// S containing all of `forced`, via project-selection min-cut. Returns the
// maximum and the residual-minimal argmax.
std::pair<std::int64_t, std::vector<int>> max_dense_linear(
    int n, const std::vector<WeightedEdge>& edges, std::int64_t w_e, std::int64_t w_v,
    const std::vector<int>& forced);

} // namespace ramsey::detail
