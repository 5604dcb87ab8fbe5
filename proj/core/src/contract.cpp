#include "ramsey/contract.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "ramsey/density.hpp"
#include "ramsey/errors.hpp"
#include "dense_linear.hpp"

namespace ramsey {

namespace {

using detail::WeightedEdge;
using detail::max_dense_linear;

std::vector<WeightedEdge> weighted(const MultiGraph& g) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.mult().size());
    for (const auto& [e, m] : g.mult()) edges.push_back({e.first, e.second, m});
    return edges;
}

// Grows a dense seed to a maximal dense vertex set of g. H is maximal iff
// contracting it to a super-vertex h leaves no S containing h and at least
// one other vertex with c + (e'(S) - r|S|) + r > 0, where c = e(H)-r(v(H)-1)
// is the seed's surplus; such S corresponds exactly to a proper superset
// H' = H u (S\{h}) with e(H')/(v(H')-1) > r.
std::vector<int> grow_maximal(const MultiGraph& g, int r, std::vector<int> h) {
    const int n = g.n();
    std::vector<char> in_h(n, 0);
    for (;;) {
        std::fill(in_h.begin(), in_h.end(), 0);
        for (int v : h) in_h[v] = 1;
        // contract h to vertex 0; other vertices follow in increasing order
        std::vector<int> map(n, 0), orig;
        orig.push_back(-1);
        for (int v = 0; v < n; ++v)
            if (!in_h[v]) {
                map[v] = static_cast<int>(orig.size());
                orig.push_back(v);
            }
        std::int64_t e_inside = 0;
        std::map<Edge, std::int64_t> acc;
        for (const auto& [e, m] : g.mult()) {
            int a = map[e.first], b = map[e.second];
            if (a == b) {
                e_inside += m; // both endpoints in h (a == b == 0)
                continue;
            }
            acc[{std::min(a, b), std::max(a, b)}] += m;
        }
        std::int64_t c = e_inside - std::int64_t{r} * (static_cast<int>(h.size()) - 1);
        std::vector<WeightedEdge> edges;
        edges.reserve(acc.size());
        for (const auto& [e, m] : acc) edges.push_back({e.first, e.second, m});
        bool grown = false;
        for (int u = 0; u < n && !grown; ++u) {
            if (in_h[u]) continue;
            auto [best, subset] = max_dense_linear(static_cast<int>(orig.size()), edges, 1, r,
                                                   {0, map[u]});
            if (best > -c - std::int64_t{r}) {
                for (int x : subset)
                    if (x != 0) h.push_back(orig[x]);
                std::sort(h.begin(), h.end());
                grown = true;
            }
        }
        if (!grown) return h;
    }
}

std::optional<std::vector<int>> maximal_dense(const MultiGraph& g, int r) {
    if (g.n() < 2) return std::nullopt;
    auto m1 = m1_density(g);
    if (m1.value <= r) return std::nullopt;
    return grow_maximal(g, r, m1.witness);
}

} // namespace

std::optional<std::vector<int>> find_maximal_dense(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("find_maximal_dense: r must be at least 1");
    return maximal_dense(MultiGraph(g), r);
}

ContractionCertificate contract_dense(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("contract_dense: r must be at least 1");
    std::vector<std::vector<int>> family;
    Contraction cur = contract_family(g, VertexFamily(g.n(), {}));
    for (;;) {
        auto h = maximal_dense(cur.contracted, r);
        if (!h) break;
        // super-vertices (ids below the family size) never occur in a dense
        // set once all earlier family members were chosen maximal
        for (int v : *h)
            if (v < static_cast<int>(family.size()))
                throw std::logic_error("contract_dense: dense set touches a contracted vertex");
        // pull back through the current vertex map
        std::vector<int> back;
        std::vector<char> pick(cur.contracted.n(), 0);
        for (int v : *h) pick[v] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (pick[cur.vertex_map[v]]) back.push_back(v);
        family.push_back(std::move(back));
        cur = contract_family(g, VertexFamily(g.n(), family));
    }
    ContractionCertificate cert;
    cert.family = VertexFamily(g.n(), family);
    cert.contracted = cur.contracted;
    cert.vertex_map = cur.vertex_map;
    cert.r = r;
    if (cert.contracted.n() >= 2 && m1_density(cert.contracted).value > r)
        throw std::logic_error("contract_dense: contraction left m1 above the target");
    return cert;
}

} // namespace ramsey
