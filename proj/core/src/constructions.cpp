#include "ramsey/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/density.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr long long kVertexBudget = 2'000'000;

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        if (r > kVertexBudget * 64) throw SizeLimitError("binomial coefficient exceeds budget");
        r = r * (n - k + i) / i;
    }
    return r;
}

// Appends a G(|base|,k,m) copy whose base side is the given vertex ids; new
// fiber vertices take ids from next_id upward, k-subsets in lexicographic
// order of base positions, then copy index.
std::vector<std::pair<std::vector<int>, std::vector<int>>> add_copy(std::vector<Edge>& edges,
                                                                    int& next_id,
                                                                    const std::vector<int>& base,
                                                                    int k, int m) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> fibers;
    int nb = static_cast<int>(base.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = base[idx[i]];
        std::vector<int> verts;
        for (int copy = 0; copy < m; ++copy) {
            int v = next_id++;
            verts.push_back(v);
            for (int u : subset) edges.push_back({std::min(u, v), std::max(u, v)});
        }
        fibers.emplace_back(std::move(subset), std::move(verts));
        // next k-combination
        int i = k - 1;
        while (i >= 0 && idx[i] == nb - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return fibers;
}

} // namespace

FiberedGraph build_gnkm(int n, int k, int m) {
    if (k < 1 || k > n || m < 1)
        throw std::invalid_argument("build_gnkm: need 1 <= k <= n and m >= 1");
    long long total = n + binomial(n, k) * static_cast<long long>(m);
    if (total > kVertexBudget) throw SizeLimitError("build_gnkm: vertex budget exceeded");
    FiberedGraph out;
    out.n = n;
    out.k = k;
    out.m = m;
    std::vector<Edge> edges;
    int next_id = n;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    out.fibers = add_copy(edges, next_id, base, k, m);
    out.graph = Graph(next_id, std::move(edges));
    return out;
}

Rational gnkm_density_check(const FiberedGraph& g) {
    auto dw = m_density(g.graph);
    if (dw.value >= g.k) throw std::logic_error("gnkm_density_check: m(G) >= k");
    // the witness must respect the counting bound e <= k * (fiber vertices)
    long long fiber_count = 0;
    for (int v : dw.witness)
        if (v >= g.n) ++fiber_count;
    long long e_inside = 0;
    std::vector<char> in(g.graph.n(), 0);
    for (int v : dw.witness) in[v] = 1;
    for (auto [u, v] : g.graph.edges())
        if (in[u] && in[v]) ++e_inside;
    if (e_inside > static_cast<long long>(g.k) * fiber_count)
        throw std::logic_error("gnkm_density_check: witness violates the degree bound");
    return dw.value;
}

std::pair<long long, long long> paths_parameters(int l, int k, int r, long long s,
                                                 const RamseyTable& table) {
    if (l < 3 || k < 2 || r < k || s < 1)
        throw std::invalid_argument("paths_parameters: need l >= 3, k >= 2, r >= k, s >= 1");
    int half = (l + 1) / 2;
    auto n = table.known_upper("generalized", {half, k}, r);
    if (!n)
        throw TableMissError("paths_parameters: missing generalized entry for " +
                             std::to_string(r) + " paths of length " + std::to_string(half) +
                             " plus clique " + std::to_string(k));
    long long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    long long m = binomial(r, k) * fact * s;
    return {*n, m};
}

GStarGraph build_gstar(int l, int k, int r, const std::vector<int>& n_seq,
                       const std::vector<int>& s_seq, const std::vector<int>& m_seq, bool relax) {
    if (l < 3 || k < 2 || r < 1) throw std::invalid_argument("build_gstar: need l >= 3, k >= 2");
    std::size_t levels = static_cast<std::size_t>((l + 1) / 2);
    if (n_seq.size() != levels || s_seq.size() != levels || m_seq.size() != levels)
        throw std::invalid_argument("build_gstar: sequences must have length ceil(l/2)");
    for (std::size_t i = 0; i < levels; ++i)
        if (n_seq[i] < k || m_seq[i] < 1 || s_seq[i] < 1)
            throw std::invalid_argument("build_gstar: sequence entries out of range");
    bool canonical = s_seq[levels - 1] == 1;
    for (std::size_t i = 1; i + 1 < levels; ++i) canonical &= s_seq[i] == n_seq[i + 1];
    if (levels > 1) canonical &= s_seq[0] == (k + 1) * n_seq[1];
    if (!canonical && !relax)
        throw std::invalid_argument("build_gstar: override violates the s-sequence ties");

    GStarGraph out;
    out.l = l;
    out.k = k;
    out.r = r;
    out.n_seq = n_seq;
    out.s_seq = s_seq;
    out.m_seq = m_seq;
    out.canonical = canonical;

    std::vector<Edge> edges;
    int next_id = n_seq[0];
    std::vector<int> base(n_seq[0]);
    for (int i = 0; i < n_seq[0]; ++i) base[i] = i;
    std::vector<std::vector<int>> frontier; // current T_i fiber vertex sets
    for (auto& [subset, verts] : add_copy(edges, next_id, base, k, m_seq[0]))
        frontier.push_back(verts);
    out.levels.push_back(frontier);
    for (std::size_t i = 1; i < levels; ++i) {
        std::vector<std::vector<int>> next_frontier;
        for (const auto& host : frontier)
            for (auto& [subset, verts] : add_copy(edges, next_id, host, k, m_seq[i]))
                next_frontier.push_back(verts);
        if (next_id > kVertexBudget) throw SizeLimitError("build_gstar: vertex budget exceeded");
        out.levels.push_back(next_frontier);
        frontier = std::move(next_frontier);
    }
    out.graph = Graph(next_id, std::move(edges));
    return out;
}

Graph kpq_witness(int a, int b, int r) {
    if (a < 1 || b < 1 || r < 1) throw std::invalid_argument("kpq_witness: parameters must be >= 1");
    long long p = static_cast<long long>(r) * (a - 1) + 1;
    long long q = static_cast<long long>(r) * (b - 1) * binomial(p, a) + 1;
    if (p + q > kVertexBudget) throw SizeLimitError("kpq_witness: vertex budget exceeded");
    return build_complete_bipartite(static_cast<int>(p), static_cast<int>(q));
}

int gstar_k_formula(int l, int r) {
    if (l < 3 || r < 2) throw std::invalid_argument("gstar_k_formula: need l >= 3, r >= 2");
    int half = (l + 1) / 2;
    long long num = static_cast<long long>(half - 1) * r + 1;
    int k = static_cast<int>((num + half - 1) / half);
    if (r - static_cast<long long>(r - k) * half < 1)
        throw std::logic_error("gstar_k_formula: path-budget inequality violated");
    return k;
}

} // namespace ramsey
