#include "ramsey/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Incremental matroid-union forest partition over edge instances
// (Roskind-Tarjan style augmenting search). Opens a new class only when no
// augmenting exchange sequence exists, so the final class count is minimal.
class ForestPartitioner {
public:
    explicit ForestPartitioner(int n) : n_(n) {}

    void insert(Edge e) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back(e);
        cls_.push_back(-1);
        if (!augment(id)) {
            classes_.emplace_back();
            assign(id, static_cast<int>(classes_.size()) - 1);
        }
    }

    std::vector<std::vector<Edge>> result() const {
        std::vector<std::vector<Edge>> out(classes_.size());
        for (std::size_t c = 0; c < classes_.size(); ++c)
            for (int id : classes_[c]) out[c].push_back(edges_[id]);
        return out;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> cls_; // edge id -> class or -1
    std::vector<std::vector<int>> classes_; // class -> edge ids

    void assign(int id, int c) {
        if (cls_[id] >= 0) {
            auto& v = classes_[cls_[id]];
            v.erase(std::find(v.begin(), v.end(), id));
        }
        cls_[id] = c;
        classes_[c].push_back(id);
    }

    // Path between u and v in class c (as edge ids), or nullopt.
    std::optional<std::vector<int>> tree_path(int c, int u, int v) const {
        std::vector<std::vector<std::pair<int, int>>> adj(n_);
        for (int id : classes_[c]) {
            adj[edges_[id].first].push_back({edges_[id].second, id});
            adj[edges_[id].second].push_back({edges_[id].first, id});
        }
        std::vector<int> via_edge(n_, -1), prev(n_, -1);
        std::deque<int> q{u};
        std::vector<char> seen(n_, 0);
        seen[u] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == v) break;
            for (auto [y, id] : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    via_edge[y] = id;
                    prev[y] = x;
                    q.push_back(y);
                }
        }
        if (!seen[v]) return std::nullopt;
        std::vector<int> path;
        for (int x = v; x != u; x = prev[x]) path.push_back(via_edge[x]);
        return path;
    }

    bool connected_in_class(int c, int u, int v) const {
        return tree_path(c, u, v).has_value();
    }

    bool augment(int root) {
        std::deque<int> queue{root};
        std::vector<char> labeled(edges_.size(), 0);
        std::vector<int> parent(edges_.size(), -1);
        labeled[root] = 1;
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            auto [u, v] = edges_[f];
            for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
                if (cls_[f] == c) continue;
                auto path = tree_path(c, u, v);
                if (!path) {
                    // f fits into class c; unwind the exchange chain
                    int cur = f, target = c;
                    while (cur >= 0) {
                        int old = cls_[cur];
                        assign(cur, target);
                        target = old;
                        cur = parent[cur];
                    }
                    return true;
                }
                for (int g : *path)
                    if (!labeled[g]) {
                        labeled[g] = 1;
                        parent[g] = f;
                        queue.push_back(g);
                    }
            }
        }
        return false;
    }
};

std::vector<Edge> instances(const MultiGraph& g) {
    std::vector<Edge> out;
    for (const auto& [e, m] : g.mult())
        for (int i = 0; i < m; ++i) out.push_back(e);
    return out;
}

ForestPartition nash_williams_instances(int n, const std::vector<Edge>& edges) {
    ForestPartitioner fp(n);
    for (auto e : edges) fp.insert(e);
    return {n, fp.result()};
}

} // namespace

ForestPartition nash_williams(const Graph& g) { return nash_williams_instances(g.n(), g.edges()); }

ForestPartition nash_williams(const MultiGraph& g) {
    return nash_williams_instances(g.n(), instances(g));
}

bool is_forest(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool is_star_forest(int n, const std::vector<Edge>& edges) {
    if (!is_forest(n, edges)) return false;
    // every component must have a vertex incident to all its edges
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto [u, v] : edges)
        if (adj[u].size() > 1 && adj[v].size() > 1) return false;
    return true;
}

std::pair<std::vector<Edge>, std::vector<Edge>> split_into_star_forests(
    int n, const std::vector<Edge>& forest) {
    if (!is_forest(n, forest)) throw std::invalid_argument("split_into_star_forests: input-not-a-forest");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : forest) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> depth(n, -1);
    // root each tree at its smallest-id vertex; edge class = parent depth parity
    std::pair<std::vector<Edge>, std::vector<Edge>> out;
    for (int root = 0; root < n; ++root) {
        if (depth[root] >= 0 || adj[root].empty()) continue;
        depth[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x])
                if (depth[y] < 0) {
                    depth[y] = depth[x] + 1;
                    Edge e{std::min(x, y), std::max(x, y)};
                    (depth[x] % 2 == 0 ? out.first : out.second).push_back(e);
                    q.push_back(y);
                }
        }
    }
    return out;
}

namespace {

Orientation orient_instances(int n, const std::vector<Edge>& edges, int k,
                             const MultiGraph& host_for_m1) {
    if (k < 1) throw std::invalid_argument("acyclic_orient: k must be at least 1");
    Orientation out;
    out.n = n;
    // peel vertices of current degree <= k; succeeds for k-degenerate graphs
    std::vector<long long> deg(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (other, edge idx)
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        ++deg[u];
        ++deg[v];
        adj[u].push_back({v, static_cast<int>(i)});
        adj[v].push_back({u, static_cast<int>(i)});
    }
    std::vector<char> removed(n, 0);
    std::vector<int> peel;
    std::vector<int> rank(n, -1);
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && deg[v] <= k) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        removed[pick] = 1;
        peel.push_back(pick);
        for (auto [u, idx] : adj[pick])
            if (!removed[u]) --deg[u];
    }
    if (static_cast<int>(peel.size()) == n) {
        for (int i = 0; i < n; ++i) rank[peel[i]] = n - 1 - i;
        out.topo_order.assign(peel.rbegin(), peel.rend());
        out.globally_acyclic = true;
        std::vector<int> indeg(n, 0);
        for (auto [u, v] : edges) {
            // later-peeled endpoint points at the earlier-peeled one
            int from = rank[u] < rank[v] ? u : v;
            int to = from == u ? v : u;
            out.arcs.push_back({from, to});
            ++indeg[to];
        }
        for (int v = 0; v < n; ++v) out.max_indegree = std::max(out.max_indegree, indeg[v]);
        return out;
    }
    // not k-degenerate; decide feasibility by m1 and fall back to a forest
    // partition certificate (in-degree <= 1 per forest, not globally acyclic)
    auto m1 = m1_density(host_for_m1);
    if (m1.value > k)
        throw InfeasibleError("acyclic_orient: infeasible, m1(G) > k", m1.witness);
    auto fp = nash_williams_instances(n, edges);
    std::vector<int> indeg(n, 0);
    for (const auto& cls : fp.classes) {
        // orient each tree away from its smallest-id root
        std::vector<std::vector<int>> cadj(n);
        for (auto [u, v] : cls) {
            cadj[u].push_back(v);
            cadj[v].push_back(u);
        }
        std::vector<char> seen(n, 0);
        for (int root = 0; root < n; ++root) {
            if (seen[root] || cadj[root].empty()) continue;
            seen[root] = 1;
            std::deque<int> q{root};
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y : cadj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        out.arcs.push_back({x, y});
                        ++indeg[y];
                        q.push_back(y);
                    }
            }
        }
    }
    for (int v = 0; v < n; ++v) out.max_indegree = std::max(out.max_indegree, indeg[v]);
    out.globally_acyclic = false;
    return out;
}

} // namespace

Orientation acyclic_orient(const Graph& g, int k) {
    return orient_instances(g.n(), g.edges(), k, MultiGraph(g));
}

Orientation acyclic_orient(const MultiGraph& g, int k) {
    return orient_instances(g.n(), instances(g), k, g);
}

namespace {

bool class_ok(int n, const std::vector<Edge>& cls, int d) {
    if (!is_forest(n, cls)) return false;
    if (d < 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : cls) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // tree diameter per component via double BFS
    std::vector<char> visited(n, 0);
    auto bfs_far = [&](int s) {
        std::vector<int> dist(n, -1);
        dist[s] = 0;
        std::deque<int> q{s};
        int far = s;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            visited[x] = 1;
            if (dist[x] > dist[far]) far = x;
            for (int y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
        }
        return std::pair{far, dist[far]};
    };
    for (int v = 0; v < n; ++v) {
        if (visited[v] || adj[v].empty()) continue;
        auto [far, d1] = bfs_far(v);
        auto [far2, diam] = bfs_far(far);
        (void)far2;
        if (diam > d) return false;
    }
    return true;
}

bool assign_rec(int n, const std::vector<Edge>& edges, int d, std::size_t i,
                std::vector<std::vector<Edge>>& classes, std::size_t used, std::size_t t) {
    if (i == edges.size()) return true;
    std::size_t limit = std::min(t, used + 1); // classes are interchangeable
    for (std::size_t c = 0; c < limit; ++c) {
        classes[c].push_back(edges[i]);
        if (class_ok(n, classes[c], d) &&
            assign_rec(n, edges, d, i + 1, classes, std::max(used, c + 1), t))
            return true;
        classes[c].pop_back();
    }
    return false;
}

} // namespace

int a_d_exact(const Graph& g, int d) {
    if (d >= 0 && d < 2) throw std::invalid_argument("a_d_exact: d must be >= 2 or unbounded");
    if (g.e() == 0) return 0;
    Int a_inf = ceil_rat(m1_density(g).value);
    if (d < 0) return static_cast<int>(a_inf);
    if (g.n() > 10 || g.e() > 15)
        throw SizeLimitError("a_d_exact: exhaustive search limited to 10 vertices / 15 edges");
    for (int t = static_cast<int>(a_inf);; ++t) {
        std::vector<std::vector<Edge>> classes(t);
        if (assign_rec(g.n(), g.edges(), d, 0, classes, 0, t)) return t;
    }
}

} // namespace ramsey
