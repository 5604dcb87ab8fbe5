#include "ramsey/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("parallel edge in simple graph");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

MultiGraph::MultiGraph(int n, std::map<Edge, int> mult) : n_(n), mult_(std::move(mult)) {
    for (auto& [edge, m] : mult_) {
        auto [u, v] = edge;
        if (u == v) throw std::invalid_argument("loop edge in multigraph");
        if (u < 0 || u > v || v >= n_) throw std::invalid_argument("bad multigraph edge");
        if (m <= 0) throw std::invalid_argument("nonpositive multiplicity");
        e_ += m;
    }
}

MultiGraph::MultiGraph(const Graph& g) : n_(g.n()) {
    for (auto e : g.edges()) mult_[e] = 1;
    e_ = g.e();
}

int MultiGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = mult_.find({u, v});
    return it == mult_.end() ? 0 : it->second;
}

VertexFamily::VertexFamily(int host_n, std::vector<std::vector<int>> sets) : sets_(std::move(sets)) {
    std::set<int> seen;
    for (auto& s : sets_) {
        if (s.empty()) throw std::invalid_argument("empty family member");
        std::sort(s.begin(), s.end());
        for (int v : s) {
            if (v < 0 || v >= host_n) throw std::invalid_argument("family vertex out of range");
            if (!seen.insert(v).second)
                throw std::invalid_argument("contract-invalid-family: overlapping sets");
        }
    }
}

Graph build_complete(int l) {
    if (l < 1) throw std::invalid_argument("complete: l must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v) edges.push_back({u, v});
    return Graph(l, std::move(edges));
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete-bipartite: sides must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

Graph build_path(int l) {
    if (l < 1) throw std::invalid_argument("path: length must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i) edges.push_back({i, i + 1});
    return Graph(l + 1, std::move(edges));
}

Graph build_cycle(int l) {
    if (l < 3) throw std::invalid_argument("cycle: length must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l});
    return Graph(l, std::move(edges));
}

Graph build_star(int l) {
    if (l < 1) throw std::invalid_argument("star: ray count must be positive");
    std::vector<Edge> edges;
    for (int i = 1; i <= l; ++i) edges.push_back({0, i});
    return Graph(l + 1, std::move(edges));
}

Graph build_named(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' needs " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (family == "complete") { need(1); return build_complete(params[0]); }
    if (family == "complete-bipartite") { need(2); return build_complete_bipartite(params[0], params[1]); }
    if (family == "path") { need(1); return build_path(params[0]); }
    if (family == "cycle") { need(1); return build_cycle(params[0]); }
    if (family == "star") { need(1); return build_star(params[0]); }
    throw std::invalid_argument("unknown graph family: " + family);
}

Graph p3_witness() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
    return Graph(10, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> relabel = vertices;
    std::sort(relabel.begin(), relabel.end());
    relabel.erase(std::unique(relabel.begin(), relabel.end()), relabel.end());
    std::vector<int> inv(g.n(), -1);
    for (std::size_t i = 0; i < relabel.size(); ++i) {
        if (relabel[i] < 0 || relabel[i] >= g.n())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        inv[relabel[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (inv[u] >= 0 && inv[v] >= 0) edges.push_back({inv[u], inv[v]});
    return {Graph(static_cast<int>(relabel.size()), std::move(edges)), std::move(relabel)};
}

static Contraction contract_impl(int n, const std::map<Edge, int>& mult, const VertexFamily& family) {
    std::vector<int> vmap(n, -1);
    int next = 0;
    for (const auto& s : family.sets()) {
        for (int v : s) vmap[v] = next;
        ++next;
    }
    for (int v = 0; v < n; ++v)
        if (vmap[v] < 0) vmap[v] = next++;
    std::map<Edge, int> cmult;
    for (const auto& [edge, m] : mult) {
        int cu = vmap[edge.first], cv = vmap[edge.second];
        if (cu == cv) continue; // edge inside a contracted set
        if (cu > cv) std::swap(cu, cv);
        cmult[{cu, cv}] += m;
    }
    return {MultiGraph(next, std::move(cmult)), std::move(vmap)};
}

Contraction contract_family(const Graph& g, const VertexFamily& family) {
    return contract_impl(g.n(), MultiGraph(g).mult(), family);
}

Contraction contract_family(const MultiGraph& g, const VertexFamily& family) {
    return contract_impl(g.n(), g.mult(), family);
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), removed(n, 0), order;
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int degeneracy = 0;
    // min-degree peeling, ties to smallest id; peel order reversed gives the
    // back-degree-bounded ordering
    std::vector<int> peel;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        degeneracy = std::max(degeneracy, deg[best]);
        removed[best] = 1;
        peel.push_back(best);
        for (int u : g.adj()[best])
            if (!removed[u]) --deg[u];
    }
    order.assign(peel.rbegin(), peel.rend());
    return {std::move(order), degeneracy};
}

} // namespace ramsey
