#include "ramsey/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <tuple>

#include "ramsey/errors.hpp"
#include "dense_linear.hpp"
#include "maxflow.hpp"

namespace ramsey {

namespace detail {

std::pair<std::int64_t, std::vector<int>> max_dense_linear(
    int n, const std::vector<WeightedEdge>& edges, std::int64_t w_e, std::int64_t w_v,
    const std::vector<int>& forced) {
    const int m = static_cast<int>(edges.size());
    const int s = n + m, t = n + m + 1;
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    detail::Dinic dinic(n + m + 2);
    std::int64_t total = 0;
    for (int i = 0; i < m; ++i) {
        std::int64_t profit = edges[i].mult * w_e;
        total += profit;
        dinic.add_edge(s, n + i, profit);
        dinic.add_edge(n + i, edges[i].u, inf);
        dinic.add_edge(n + i, edges[i].v, inf);
    }
    for (int v = 0; v < n; ++v) dinic.add_edge(v, t, w_v);
    for (int v : forced) dinic.add_edge(s, v, inf);
    std::int64_t cut = dinic.max_flow(s, t);
    auto side = dinic.min_cut_source_side(s);
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
        if (side[v]) subset.push_back(v);
    return {total - cut, std::move(subset)};
}

} // namespace detail

namespace {

using detail::WeightedEdge;
using detail::max_dense_linear;

std::int64_t edges_inside(const std::vector<WeightedEdge>& edges, const std::vector<int>& subset,
                          int n) {
    std::vector<char> in(n, 0);
    for (int v : subset) in[v] = 1;
    std::int64_t e = 0;
    for (const auto& we : edges)
        if (in[we.u] && in[we.v]) e += we.mult;
    return e;
}

// Dinkelbach iteration for max e(S)/v(S).
DensityWitness m_density_impl(int n, const std::vector<WeightedEdge>& edges) {
    std::int64_t etot = 0;
    for (const auto& we : edges) etot += we.mult;
    if (etot == 0) return {Rational(0), {}};
    std::vector<int> witness(n);
    for (int v = 0; v < n; ++v) witness[v] = v;
    Rational value(etot, n);
    for (;;) {
        auto p = static_cast<std::int64_t>(rat_num(value));
        auto q = static_cast<std::int64_t>(rat_den(value));
        auto [best, subset] = max_dense_linear(n, edges, q, p, {});
        if (best <= 0) break;
        std::int64_t es = edges_inside(edges, subset, n);
        value = Rational(es, static_cast<std::int64_t>(subset.size()));
        witness = std::move(subset);
    }
    return {value, std::move(witness)};
}

// Dinkelbach iteration for max e(S)/(v(S)-1), v(S) >= 2. A single forced
// vertex per flow run keeps the empty and singleton sets out of the argmax.
DensityWitness m1_density_impl(int n, const std::vector<WeightedEdge>& edges) {
    if (n < 2) throw std::invalid_argument("m1_density: parameter-undefined for fewer than 2 vertices");
    std::int64_t etot = 0;
    for (const auto& we : edges) etot += we.mult;
    if (etot == 0) return {Rational(0), {0, 1}};
    std::vector<int> witness(n);
    for (int v = 0; v < n; ++v) witness[v] = v;
    Rational value(etot, n - 1);
    bool improved = true;
    while (improved) {
        improved = false;
        auto p = static_cast<std::int64_t>(rat_num(value));
        auto q = static_cast<std::int64_t>(rat_den(value));
        for (int u = 0; u < n && !improved; ++u) {
            auto [best, subset] = max_dense_linear(n, edges, q, p, {u});
            if (best > -p) { // q*e(S) - p*(v(S)-1) > 0
                std::int64_t es = edges_inside(edges, subset, n);
                value = Rational(es, static_cast<std::int64_t>(subset.size()) - 1);
                witness = std::move(subset);
                improved = true;
            }
        }
    }
    return {value, std::move(witness)};
}

std::vector<WeightedEdge> weighted(const Graph& g) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.push_back({u, v, 1});
    return edges;
}

std::vector<WeightedEdge> weighted(const MultiGraph& g) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.mult().size());
    for (const auto& [e, m] : g.mult()) edges.push_back({e.first, e.second, m});
    return edges;
}

std::vector<std::uint64_t> adj_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

} // namespace

DensityWitness m_density(const Graph& g) { return m_density_impl(g.n(), weighted(g)); }
DensityWitness m_density(const MultiGraph& g) { return m_density_impl(g.n(), weighted(g)); }
DensityWitness m1_density(const Graph& g) { return m1_density_impl(g.n(), weighted(g)); }
DensityWitness m1_density(const MultiGraph& g) { return m1_density_impl(g.n(), weighted(g)); }

namespace {

struct M1kSearch {
    int n, k;
    std::vector<std::uint64_t> adj;
    std::vector<int> suffix_edges; // edges with both endpoints >= idx
    Rational best = 0;
    std::uint64_t best_mask = 0;
    bool found = false;

    void run(int idx, std::uint64_t s_mask, int cnt, int es) {
        if (cnt + (n - idx) < k) return;
        if (found) {
            // optimistic bound: every remaining edge joins, denominator as
            // small as the vertex-count constraint allows
            long long ub_e = es + suffix_edges[idx];
            for (int v = idx; v < n; ++v)
                ub_e += std::popcount(adj[v] & s_mask);
            long long ub_den = std::max(cnt, k) - 1;
            // include-first DFS finds the lexicographically least maximizer
            // first, so ties never replace the stored witness
            if (Rational(ub_e, ub_den) <= best) return;
        }
        if (cnt >= k) {
            Rational val(es, cnt - 1);
            if (!found || val > best) {
                best = val;
                best_mask = s_mask;
                found = true;
            }
        }
        if (idx == n) return;
        int gain = std::popcount(adj[idx] & s_mask);
        run(idx + 1, s_mask | (std::uint64_t{1} << idx), cnt + 1, es + gain);
        run(idx + 1, s_mask, cnt, es);
    }
};

} // namespace

DensityWitness m1k_density(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("m1k_density: invalid-parameter k < 2");
    if (g.n() > 24) throw SizeLimitError("m1k_density: exact support limited to 24 vertices");
    if (g.n() < k) return {Rational(0), {}};
    if (k == 2) return m1_density(g);
    M1kSearch s;
    s.n = g.n();
    s.k = k;
    s.adj = adj_masks(g);
    s.suffix_edges.assign(g.n() + 1, 0);
    for (int idx = g.n() - 1; idx >= 0; --idx) {
        int cnt = 0;
        for (auto [u, v] : g.edges())
            if (u >= idx && v >= idx) ++cnt;
        s.suffix_edges[idx] = cnt;
    }
    s.run(0, 0, 0, 0);
    if (!s.found) return {Rational(0), {}};
    return {s.best, mask_to_list(s.best_mask)};
}

namespace {

// Shared subset scan for the enumeration oracles: maximize value(e,v) over
// subsets with at least min_v vertices, lexicographically least witness on ties.
template <typename F>
DensityWitness enumerate_subsets(const Graph& g, int min_v, F value) {
    if (g.n() > 24) throw SizeLimitError("subset enumeration limited to 24 vertices");
    auto adj = adj_masks(g);
    DensityWitness out{Rational(0), {}};
    bool found = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
        int v = std::popcount(mask);
        if (v < min_v) continue;
        int e = 0;
        for (std::uint64_t rest = mask; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj[x] & rest);
        }
        Rational val = value(e, v);
        if (!found || val > out.value) {
            out.value = val;
            out.witness = mask_to_list(mask);
            found = true;
        } else if (val == out.value) {
            auto w = mask_to_list(mask);
            if (w < out.witness) out.witness = std::move(w);
        }
    }
    if (!found) return {Rational(0), {}};
    return out;
}

} // namespace

DensityWitness m_density_bruteforce(const Graph& g) {
    if (g.e() == 0) return {Rational(0), {}};
    return enumerate_subsets(g, 1, [](int e, int v) { return Rational(e, v); });
}

DensityWitness m1_density_bruteforce(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("m1_density: parameter-undefined");
    if (g.e() == 0) return {Rational(0), {0, 1}};
    return enumerate_subsets(g, 2, [](int e, int v) { return Rational(e, v - 1); });
}

DensityWitness m1k_density_bruteforce(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("m1k_density: invalid-parameter k < 2");
    if (g.n() < k) return {Rational(0), {}};
    return enumerate_subsets(g, k, [](int e, int v) { return Rational(e, v - 1); });
}

DensityWitness m2_density_bruteforce(const Graph& f) {
    if (f.n() < 3) throw std::invalid_argument("m2_density: parameter-undefined for fewer than 3 vertices");
    return enumerate_subsets(f, 3, [](int e, int v) { return Rational(e - 1, v - 2); });
}

DensityWitness m2_density(const Graph& f) {
    if (f.n() < 3) throw std::invalid_argument("m2_density: parameter-undefined for fewer than 3 vertices");
    if (f.n() > 20) throw SizeLimitError("m2_density: enumeration limited to 20 vertices");
    return m2_density_bruteforce(f);
}

int d_bipartite(const Graph& f, const std::vector<int>& side_a, const std::vector<int>& side_b) {
    std::vector<int> side(f.n(), -1);
    for (int v : side_a) side.at(v) = 0;
    for (int v : side_b) {
        if (side.at(v) == 0) throw std::invalid_argument("invalid-bipartition: sides overlap");
        side[v] = 1;
    }
    for (int v = 0; v < f.n(); ++v)
        if (side[v] < 0) throw std::invalid_argument("invalid-bipartition: vertex not covered");
    int max_a = 0, max_b = 0;
    for (auto [u, v] : f.edges()) {
        if (side[u] == side[v]) throw std::invalid_argument("invalid-bipartition: edge inside a side");
        int du = f.degree(u), dv = f.degree(v);
        if (side[u] == 0) {
            max_a = std::max(max_a, du);
            max_b = std::max(max_b, dv);
        } else {
            max_a = std::max(max_a, dv);
            max_b = std::max(max_b, du);
        }
    }
    return std::min(max_a, max_b);
}

bool find_bipartition(const Graph& f, std::vector<int>& side_a, std::vector<int>& side_b) {
    std::vector<int> color(f.n(), -1);
    for (int root = 0; root < f.n(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : f.adj()[v]) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    side_a.clear();
    side_b.clear();
    for (int v = 0; v < f.n(); ++v) (color[v] == 0 ? side_a : side_b).push_back(v);
    return true;
}

namespace {

bool colorable_rec(const Graph& f, const std::vector<int>& order, int k, std::size_t i,
                   std::vector<int>& color, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    int limit = std::min(k, used + 1); // canonical color introduction
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : f.adj()[v])
            if (color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable_rec(f, order, k, i + 1, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

bool colorable(const Graph& f, const std::vector<int>& order, int k) {
    std::vector<int> color(f.n(), -1);
    return colorable_rec(f, order, k, 0, color, 0);
}

} // namespace

int chromatic_number(const Graph& f, int size_limit) {
    if (f.n() > size_limit) throw SizeLimitError("chromatic_number: graph exceeds size threshold");
    if (f.n() == 0) return 0;
    if (f.e() == 0) return 1;
    auto order = degeneracy_order(f).order;
    for (int k = 2; k <= f.n(); ++k)
        if (colorable(f, order, k)) return k;
    return f.n();
}

namespace {

void max_clique_rec(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int size, int& best) {
    if (size + std::popcount(cand) <= best) return;
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        best = std::max(best, size + 1);
        max_clique_rec(adj, cand & adj[v], size + 1, best);
    }
}

} // namespace

int clique_number(const Graph& f, int size_limit) {
    if (f.n() > size_limit) throw SizeLimitError("clique_number: graph exceeds size threshold");
    if (f.n() == 0) return 0;
    auto adj = adj_masks(f);
    int best = 1;
    max_clique_rec(adj, (std::uint64_t{1} << f.n()) - 1, 0, best);
    return best;
}

} // namespace ramsey
