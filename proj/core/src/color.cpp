#include "ramsey/color.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ramsey/contract.hpp"
#include "ramsey/decompose.hpp"
#include "ramsey/density.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

EdgeColoring::EdgeColoring(Graph h, int rr, std::vector<int> cols)
    : host(std::move(h)), r(rr), colors(std::move(cols)) {
    if (r < 1) throw std::invalid_argument("coloring: r must be >= 1");
    if (colors.size() != static_cast<std::size_t>(host.e()))
        throw std::invalid_argument("coloring: one color per edge required");
    for (int c : colors)
        if (c < 0 || c >= r) throw std::invalid_argument("coloring: color out of range");
}

int EdgeColoring::color_of(int u, int v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(host.edges().begin(), host.edges().end(), e);
    if (it == host.edges().end() || *it != e)
        throw std::invalid_argument("coloring: no such edge");
    return colors[static_cast<std::size_t>(it - host.edges().begin())];
}

namespace {

// Adjacency view of one color class (or any plain edge set).
struct ClassView {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit ClassView(int nn) : n(nn), adj(nn) {}

    void add(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    bool has(int u, int v) const {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    }
};

// --- pattern detectors; each returns an embedded copy or nullopt ---

bool path_dfs(const ClassView& g, std::vector<int>& path, std::vector<char>& used, int left) {
    if (left == 0) return true;
    for (int w : g.adj[path.back()]) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (path_dfs(g, path, used, left - 1)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

std::optional<std::vector<int>> find_path(const ClassView& g, int l) {
    std::vector<char> used(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v].empty()) continue;
        std::vector<int> path{v};
        used[v] = 1;
        if (path_dfs(g, path, used, l)) return path;
        used[v] = 0;
    }
    return std::nullopt;
}

bool cycle_dfs(const ClassView& g, std::vector<int>& path, std::vector<char>& used, int l) {
    if (static_cast<int>(path.size()) == l)
        return g.has(path.back(), path.front());
    for (int w : g.adj[path.back()]) {
        if (used[w] || w < path.front()) continue; // path.front() is the least vertex
        used[w] = 1;
        path.push_back(w);
        if (cycle_dfs(g, path, used, l)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

std::optional<std::vector<int>> find_cycle(const ClassView& g, int l) {
    std::vector<char> used(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (static_cast<int>(g.adj[v].size()) < 2) continue;
        std::vector<int> path{v};
        used[v] = 1;
        if (cycle_dfs(g, path, used, l)) return path;
        used[v] = 0;
    }
    return std::nullopt;
}

bool clique_dfs(const ClassView& g, std::vector<int>& cur, std::vector<int>& cand, int l) {
    if (static_cast<int>(cur.size()) == l) return true;
    if (cur.size() + cand.size() < static_cast<std::size_t>(l)) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (g.has(v, cand[j])) next.push_back(cand[j]);
        cur.push_back(v);
        if (clique_dfs(g, cur, next, l)) return true;
        cur.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_clique(const ClassView& g, int l) {
    if (l == 1) {
        for (int v = 0; v < g.n; ++v)
            if (!g.adj[v].empty()) return std::vector<int>{v};
        return std::nullopt;
    }
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (static_cast<int>(g.adj[v].size()) >= l - 1) cand.push_back(v);
    std::vector<int> cur;
    if (clique_dfs(g, cur, cand, l)) return cur;
    return std::nullopt;
}

bool biclique_dfs(const ClassView& g, std::vector<int>& side_a, std::vector<int>& common, int from,
                  int a, int b, std::vector<int>& out) {
    if (static_cast<int>(side_a.size()) == a) {
        if (static_cast<int>(common.size()) < b) return false;
        out = side_a;
        out.insert(out.end(), common.begin(), common.begin() + b);
        return true;
    }
    if (static_cast<int>(common.size()) < b) return false;
    for (int v = from; v < g.n; ++v) {
        std::vector<int> next;
        for (int w : common)
            if (w != v && g.has(v, w)) next.push_back(w);
        if (static_cast<int>(next.size()) < b) continue;
        side_a.push_back(v);
        if (biclique_dfs(g, side_a, next, v + 1, a, b, out)) return true;
        side_a.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_biclique(const ClassView& g, int a, int b) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> side_a, out;
    if (biclique_dfs(g, side_a, all, 0, a, b, out)) return out;
    return std::nullopt;
}

bool embed_dfs(const ClassView& g, const Graph& f, const std::vector<int>& order, std::size_t i,
               std::vector<int>& image, std::vector<char>& used) {
    if (i == order.size()) return true;
    int fv = order[i];
    for (int v = 0; v < g.n; ++v) {
        if (used[v] || static_cast<int>(g.adj[v].size()) < f.degree(fv)) continue;
        bool ok = true;
        for (int fu : f.adj()[fv])
            if (image[fu] >= 0 && !g.has(v, image[fu])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[fv] = v;
        used[v] = 1;
        if (embed_dfs(g, f, order, i + 1, image, used)) return true;
        image[fv] = -1;
        used[v] = 0;
    }
    return false;
}

std::optional<std::vector<int>> find_explicit(const ClassView& g, const Graph& f) {
    std::vector<int> order(f.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return f.degree(x) > f.degree(y); });
    std::vector<int> image(f.n(), -1);
    std::vector<char> used(g.n, 0);
    if (embed_dfs(g, f, order, 0, image, used)) return image;
    return std::nullopt;
}

std::optional<std::vector<int>> find_pattern(const ClassView& g, const PatternSpec& f) {
    switch (f.kind) {
        case PatternSpec::Kind::Path: return find_path(g, f.a);
        case PatternSpec::Kind::Cycle: return find_cycle(g, f.a);
        case PatternSpec::Kind::Clique: return find_clique(g, f.a);
        case PatternSpec::Kind::Biclique: return find_biclique(g, f.a, f.b);
        case PatternSpec::Kind::Explicit: return find_explicit(g, f.graph);
    }
    throw std::logic_error("bad pattern kind");
}

} // namespace

std::optional<MonoWitness> find_mono_copy(const EdgeColoring& c, const PatternSpec& f) {
    if (f.kind == PatternSpec::Kind::Explicit && f.graph.n() > 10)
        throw SizeLimitError("explicit patterns limited to 10 vertices");
    for (int s = 0; s < c.r; ++s) {
        ClassView view(c.host.n());
        for (std::size_t i = 0; i < c.colors.size(); ++i)
            if (c.colors[i] == s) view.add(c.host.edges()[i].first, c.host.edges()[i].second);
        if (auto copy = find_pattern(view, f)) return MonoWitness{s, std::move(*copy)};
    }
    return std::nullopt;
}

namespace {

// Edges reordered breadth-first from vertex 0 so that the search commits to
// locally connected prefixes early.
std::vector<int> bfs_edge_order(const Graph& g) {
    std::vector<int> rank(g.n(), -1);
    int next = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (rank[s] >= 0) continue;
        std::deque<int> q{s};
        rank[s] = next++;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.adj()[v])
                if (rank[w] < 0) {
                    rank[w] = next++;
                    q.push_back(w);
                }
        }
    }
    std::vector<int> order(g.e());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto key = [&](int i) {
            auto [u, v] = g.edges()[i];
            int a = rank[u], b = rank[v];
            return std::pair{std::max(a, b), std::min(a, b)};
        };
        return key(x) < key(y);
    });
    return order;
}

// Backtracking edge-coloring search shared by is_ramsey and
// ffree_coloring_small. Colors are introduced canonically (color c+1 only
// after c is used). Returns the first (lexicographically least) coloring with
// no monochromatic f, or nullopt when none exists.
struct ColoringSearch {
    const Graph& g;
    const PatternSpec& f;
    int r;
    std::uint64_t budget, nodes = 0;
    std::vector<int> order; // position -> edge index
    std::vector<int> colors; // by edge index, -1 unassigned

    ColoringSearch(const Graph& gg, const PatternSpec& ff, int rr, std::uint64_t bud)
        : g(gg), f(ff), r(rr), budget(bud), order(bfs_edge_order(gg)), colors(gg.e(), -1) {}

    bool class_has_mono(int color) const {
        ClassView view(g.n());
        for (int i = 0; i < g.e(); ++i)
            if (colors[i] == color) view.add(g.edges()[i].first, g.edges()[i].second);
        return find_pattern(view, f).has_value();
    }

    bool search(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        int e = order[pos];
        int limit = std::min(r, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (++nodes > budget) throw BudgetExhaustedError(nodes);
            colors[e] = c;
            if (!class_has_mono(c) && search(pos + 1, std::max(used, c + 1))) return true;
            colors[e] = -1;
        }
        return false;
    }
};

} // namespace

RamseyVerdict is_ramsey(const Graph& g, const PatternSpec& f, int r, std::uint64_t budget) {
    if (r < 2) throw std::invalid_argument("is_ramsey: r must be >= 2");
    ColoringSearch s(g, f, r, budget);
    RamseyVerdict verdict;
    if (g.e() == 0) {
        // no edges: the empty coloring is trivially pattern-free
        verdict.is_ramsey = false;
        verdict.certificate = EdgeColoring(g, r, {});
        return verdict;
    }
    bool found = s.search(0, 0);
    verdict.nodes_searched = s.nodes;
    verdict.is_ramsey = !found;
    if (found) {
        verdict.certificate = EdgeColoring(g, r, s.colors);
        if (find_mono_copy(*verdict.certificate, f))
            throw std::logic_error("is_ramsey: certificate failed self-check");
    }
    return verdict;
}

std::optional<EdgeColoring> ffree_coloring_small(const Graph& h, const PatternSpec& f, int r,
                                                 std::uint64_t budget) {
    if (r < 1) throw std::invalid_argument("ffree_coloring_small: r must be >= 1");
    if (h.e() > 28) throw SizeLimitError("ffree_coloring_small: limited to 28 edges");
    if (h.e() == 0) return EdgeColoring(h, r, {});
    ColoringSearch s(h, f, r, budget);
    if (!s.search(0, 0)) return std::nullopt;
    EdgeColoring out(h, r, s.colors);
    if (find_mono_copy(out, f))
        throw std::logic_error("ffree_coloring_small: output failed self-check");
    return out;
}

EdgeColoring greedy_backdegree_coloring(const Graph& g, int r, int delta) {
    if (r < 1 || delta < 2)
        throw std::invalid_argument("greedy_backdegree_coloring: need r >= 1, delta >= 2");
    Rational cap(std::int64_t{r} * (delta - 1) + 1, 2);
    if (g.e() > 0 && m_density(g).value >= cap)
        throw std::invalid_argument(
            "greedy_backdegree_coloring: precondition m(G) < (r(delta-1)+1)/2 violated");
    auto ord = degeneracy_order(g);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[ord.order[i]] = i;
    std::vector<int> colors(g.e(), -1);
    for (int i = 0; i < g.n(); ++i) {
        int v = ord.order[i];
        std::vector<int> count(r, 0);
        for (int u : g.adj()[v]) {
            if (pos[u] > i) continue; // only back-edges
            int c = 0;
            while (c < r && count[c] >= delta - 1) ++c;
            if (c == r)
                throw std::invalid_argument(
                    "greedy_backdegree_coloring: back-degree exceeds r(delta-1)");
            ++count[c];
            Edge e{std::min(u, v), std::max(u, v)};
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
            colors[static_cast<std::size_t>(it - g.edges().begin())] = c;
        }
    }
    return EdgeColoring(g, r, std::move(colors));
}

namespace {

// Shared engine plumbing: contract to density target, color the dense family
// members with the small-graph search, distribute the contracted multigraph's
// forest classes back onto the original cross edges.
EdgeColoring assemble_partition(const Graph& g, const ContractionCertificate& cert,
                                const PatternSpec& small_pattern, int r,
                                const std::vector<std::vector<Edge>>& forest_classes,
                                const std::vector<int>& class_color) {
    std::vector<int> colors(g.e(), -1);
    auto edge_index = [&](int u, int v) {
        Edge e{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
        return static_cast<std::size_t>(it - g.edges().begin());
    };
    for (const auto& member : cert.family.sets()) {
        auto sub = induced_subgraph(g, member);
        auto small = ffree_coloring_small(sub.graph, small_pattern, r);
        if (!small)
            throw std::logic_error("partition engine: dense part admits no good coloring");
        for (std::size_t i = 0; i < small->colors.size(); ++i) {
            auto [u, v] = sub.graph.edges()[i];
            colors[edge_index(sub.relabel[u], sub.relabel[v])] = small->colors[i];
        }
    }
    // queue one color per contracted edge instance, keyed by the vertex pair
    std::map<Edge, std::deque<int>> slots;
    for (std::size_t cls = 0; cls < forest_classes.size(); ++cls)
        for (auto e : forest_classes[cls]) slots[e].push_back(class_color[cls]);
    for (int i = 0; i < g.e(); ++i) {
        auto [u, v] = g.edges()[i];
        int cu = cert.vertex_map[u], cv = cert.vertex_map[v];
        if (cu == cv) continue; // inside a family member, already colored
        Edge ce{std::min(cu, cv), std::max(cu, cv)};
        auto& q = slots[ce];
        if (q.empty()) throw std::logic_error("partition engine: forest classes out of sync");
        colors[i] = q.front();
        q.pop_front();
    }
    for (int c : colors)
        if (c < 0) throw std::logic_error("partition engine: uncolored edge");
    return EdgeColoring(g, r, std::move(colors));
}

void certify(const EdgeColoring& coloring, const PatternSpec& f, const char* engine) {
    if (find_mono_copy(coloring, f))
        throw std::logic_error(std::string(engine) + ": output failed self-check");
}

} // namespace

EdgeColoring cycle_free_partition(const Graph& g, int l, int r, int R) {
    if (l < 3 || r < 1) throw std::invalid_argument("cycle_free_partition: need l >= 3, r >= 1");
    if (m1k_density(g, R).value > r)
        throw std::invalid_argument("cycle_free_partition: precondition m1(G,R) <= r violated");
    auto f = PatternSpec::cycle(l);
    auto cert = contract_dense(g, r);
    auto fp = nash_williams(cert.contracted);
    if (fp.classes.size() > static_cast<std::size_t>(r))
        throw std::logic_error("cycle_free_partition: too many forests");
    std::vector<int> class_color(fp.classes.size());
    std::iota(class_color.begin(), class_color.end(), 0);
    auto out = assemble_partition(g, cert, f, r, fp.classes, class_color);
    certify(out, f, "cycle_free_partition");
    return out;
}

EdgeColoring biclique_free_partition(const Graph& g, int a, int b, int r, int R) {
    if (a < 2 || r < 1)
        throw std::invalid_argument("biclique_free_partition: need a >= 2, r >= 1");
    if (b < (a - 1) * (a - 1) + 1)
        throw std::invalid_argument("biclique_free_partition: need b >= (a-1)^2+1");
    int target = r * (a - 1);
    if (m1k_density(g, R).value > target)
        throw std::invalid_argument(
            "biclique_free_partition: precondition m1(G,R) <= r(a-1) violated");
    auto f = PatternSpec::biclique(a, b);
    auto cert = contract_dense(g, target);
    auto fp = nash_williams(cert.contracted);
    if (fp.classes.size() > static_cast<std::size_t>(target))
        throw std::logic_error("biclique_free_partition: too many forests");
    // bundle a-1 forests per color
    std::vector<int> class_color(fp.classes.size());
    for (std::size_t i = 0; i < fp.classes.size(); ++i)
        class_color[i] = static_cast<int>(i) / (a - 1);
    auto out = assemble_partition(g, cert, f, r, fp.classes, class_color);
    certify(out, f, "biclique_free_partition");
    return out;
}

EdgeColoring path_free_partition(const Graph& g, int l, int r, int R) {
    if (l < 3 || r < 2) throw std::invalid_argument("path_free_partition: need l >= 3, r >= 2");
    if (r % 2 != 0)
        throw std::invalid_argument(
            "path_free_partition: odd r unsupported (the star-forest split would need r+1 "
            "classes)");
    int half = r / 2;
    if (m1k_density(g, R).value > half)
        throw std::invalid_argument(
            "path_free_partition: precondition m1(G,R) <= ceil(r/2) violated");
    auto f = PatternSpec::path(l);
    auto small = l / 3 >= 1 ? PatternSpec::path(l / 3) : PatternSpec::path(1);
    auto cert = contract_dense(g, half);
    auto fp = nash_williams(cert.contracted);
    if (fp.classes.size() > static_cast<std::size_t>(half))
        throw std::logic_error("path_free_partition: too many forests");
    // split every forest into two star forests, one color per half
    std::vector<std::vector<Edge>> classes;
    std::vector<int> class_color;
    for (std::size_t i = 0; i < fp.classes.size(); ++i) {
        auto [even, odd] = split_into_star_forests(fp.n, fp.classes[i]);
        classes.push_back(std::move(even));
        class_color.push_back(static_cast<int>(2 * i));
        classes.push_back(std::move(odd));
        class_color.push_back(static_cast<int>(2 * i + 1));
    }
    auto out = assemble_partition(g, cert, small, r, classes, class_color);
    certify(out, f, "path_free_partition");
    return out;
}

namespace {

// smallest independent k-set of the auxiliary graph avoiding `tried`
std::optional<std::vector<int>> independent_set(const ClassView& p, int k,
                                                const std::vector<std::vector<int>>& skip) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(cur.size()) == k)
            return std::find(skip.begin(), skip.end(), cur) == skip.end();
        for (int v = from; v < p.n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (p.has(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            if (self(self, v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return cur;
    return std::nullopt;
}

} // namespace

std::optional<StarColoringWitness> extract_star_coloring(const FiberedGraph& g,
                                                         const EdgeColoring& c, int l, int s) {
    if (s < 1 || l < 3) throw std::invalid_argument("extract_star_coloring: need s >= 1, l >= 3");
    if (c.host.n() != g.graph.n() || c.host.e() != g.graph.e())
        throw std::invalid_argument("extract_star_coloring: coloring does not match the graph");
    const int k = g.k;
    // fiber lookup by base subset
    std::map<std::vector<int>, const std::vector<int>*> fiber_of;
    for (const auto& [a, verts] : g.fibers) fiber_of[a] = &verts;

    auto colorful = [&](const std::vector<int>& a, const std::vector<int>& fiber) {
        for (int v : fiber) {
            std::vector<int> seen;
            for (int u : a) seen.push_back(c.color_of(u, v));
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        }
        return true;
    };

    // phase 1: walk independent k-sets of the auxiliary graph over the base;
    // non-colorful fibers contribute a same-colored base pair as a new edge
    ClassView p(g.n);
    std::vector<std::vector<int>> tried;
    while (auto a = independent_set(p, k, tried)) {
        const auto& fiber = *fiber_of.at(*a);
        if (!colorful(*a, fiber)) {
            bool added = false;
            for (int v : fiber) {
                for (std::size_t i = 0; i < a->size() && !added; ++i)
                    for (std::size_t j = i + 1; j < a->size() && !added; ++j)
                        if (c.color_of((*a)[i], v) == c.color_of((*a)[j], v) &&
                            !p.has((*a)[i], (*a)[j])) {
                            p.add((*a)[i], (*a)[j]);
                            added = true;
                        }
                if (added) break;
            }
            if (!added) tried.push_back(*a); // all repeats already recorded
            continue;
        }
        // phase 2: pigeonhole the colorful fiber by color set, then by the
        // order the colors appear along the sorted base vertices
        std::map<std::vector<int>, std::vector<int>> by_order;
        for (int v : fiber) {
            std::vector<int> ord;
            for (int u : *a) ord.push_back(c.color_of(u, v));
            by_order[ord].push_back(v);
        }
        for (const auto& [ord, members] : by_order)
            if (static_cast<int>(members.size()) >= s) {
                StarColoringWitness w;
                w.a = *a;
                w.b.assign(members.begin(), members.begin() + s);
                return w;
            }
        tried.push_back(*a);
    }
    return std::nullopt;
}

} // namespace ramsey
