// Acceptance gate: one criterion per invocation, selected by argv[1] (1-10).
// Prints exactly one line "criterion N: PASS" or "criterion N: FAIL (...)".
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <ramsey/bounds.hpp>
#include <ramsey/color.hpp>
#include <ramsey/constructions.hpp>
#include <ramsey/contract.hpp>
#include <ramsey/decompose.hpp>
#include <ramsey/density.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/graph.hpp>

using namespace ramsey;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph random_forest(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        if (rng() % 4 == 0) continue; // leave some vertices isolated / split components
        int u = static_cast<int>(rng() % static_cast<unsigned>(v));
        edges.push_back({u, v});
    }
    return Graph(n, edges);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if (mask >> idx & 1) edges.push_back({u, v});
    return Graph(n, edges);
}

std::uint64_t mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    int idx = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v, ++idx)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << idx;
    return mask;
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            int a = perm[pairs[i].first], b = perm[pairs[i].second];
            if (a > b) std::swap(a, b);
            m |= std::uint64_t{1} << (a * n - a * (a + 1) / 2 + (b - a - 1));
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All graphs on exactly n vertices up to isomorphism, grown by vertex
// extension from the (n-1)-vertex representatives.
std::vector<std::vector<std::uint64_t>> nonisomorphic_upto(int nmax) {
    std::vector<std::vector<std::uint64_t>> out(nmax + 1);
    out[1] = {0};
    for (int n = 2; n <= nmax; ++n) {
        std::set<std::uint64_t> seen;
        for (std::uint64_t base : out[n - 1]) {
            Graph g = graph_from_mask(n - 1, base);
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
                std::vector<Edge> edges = g.edges();
                for (int v = 0; v < n - 1; ++v)
                    if (nb >> v & 1) edges.push_back({v, n - 1});
                seen.insert(canonical_mask(n, mask_of(Graph(n, edges))));
            }
        }
        out[n].assign(seen.begin(), seen.end());
    }
    return out;
}

bool is_star_forest_set(int n, const std::vector<Edge>& es) {
    return is_star_forest(n, es);
}

// ---------------------------------------------------------------- criteria

// Exact density parameters agree with full subset enumeration on every
// labeled graph with <= 6 vertices plus 300 random graphs on 7-9 vertices.
void criterion1() {
    long long graphs = 0;
    auto check_graph = [&](const Graph& g) {
        ++graphs;
        expect(m_density(g).value == m_density_bruteforce(g).value, "m mismatch");
        if (g.n() >= 2)
            expect(m1_density(g).value == m1_density_bruteforce(g).value, "m1 mismatch");
        for (int k : {3, 4, 5})
            expect(m1k_density(g, k).value == m1k_density_bruteforce(g, k).value, "m1k mismatch");
        if (g.n() >= 3)
            expect(m2_density(g).value == m2_density_bruteforce(g).value, "m2 mismatch");
    };
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            check_graph(graph_from_mask(n, mask));
    }
    for (unsigned i = 0; i < 300; ++i)
        check_graph(random_graph(7 + static_cast<int>(i % 3), 0.1 + 0.08 * (i % 10), 11000 + i));
    expect(graphs == 33867 + 300, "unexpected graph count");
}

// Forest partitions: exactly ceil(m1) classes, all acyclic, covering E(G),
// with the witness subgraph certifying that one class fewer is impossible.
void criterion2() {
    for (unsigned i = 0; i < 500; ++i) {
        int n = 2 + static_cast<int>(i % 39);
        double p = 0.05 + 0.9 * (i % 11) / 10.0;
        Graph g = random_graph(n, p, 20000 + i);
        auto fp = nash_williams(g);
        if (g.e() == 0) {
            expect(fp.classes.empty(), "classes for edgeless graph");
            continue;
        }
        auto m1 = m1_density(g);
        long long r = static_cast<long long>(ceil_rat(m1.value));
        expect(static_cast<long long>(fp.classes.size()) == r, "class count != ceil(m1)");
        std::vector<Edge> all;
        for (const auto& cls : fp.classes) {
            expect(is_forest(g.n(), cls), "class not a forest");
            all.insert(all.end(), cls.begin(), cls.end());
        }
        std::sort(all.begin(), all.end());
        expect(all == g.edges(), "classes do not partition E(G)");
        // counting bound on the witness: e(H) > (r-1)(v(H)-1)
        std::vector<bool> in(g.n(), false);
        for (int v : m1.witness) in[v] = true;
        long long eh = 0;
        for (auto [u, v] : g.edges())
            if (in[u] && in[v]) ++eh;
        expect(eh > (r - 1) * (static_cast<long long>(m1.witness.size()) - 1),
               "witness does not rule out r-1 forests");
    }
}

// The pendant-cycle witness settles the P3 value from both sides: its exact
// density is 1 and it forces a monochromatic P3, while the path-family lower
// rule evaluates to exactly 1 for (l=3, r=2).
void criterion3() {
    Graph g = p3_witness();
    expect(m_density(g).value == Rational(1), "witness density != 1");
    expect(m_density_bruteforce(g).value == Rational(1), "oracle density != 1");
    expect(is_ramsey(g, PatternSpec::path(3), 2).is_ramsey, "witness not Ramsey for P3");

    auto table = load_table_file(std::string(SOURCE_DIR) + "/data/ramsey_table.txt");
    bool found = false;
    for (const auto& b : lower_bounds(PatternSpec::path(3), 2, table))
        if (b.source == "path-family") {
            expect(b.value == Rational(1), "path-family lower != 1");
            found = true;
        }
    expect(found, "path-family rule missing");
    expect(best_interval(PatternSpec::path(3), 2, table).lower == Rational(1),
           "best lower != 1");
}

// Gadget sparsity: m(G(n,k,m)) < k exactly at small scale; in-degree-k
// orientation certificates at ~1e5 vertices.
void criterion4() {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= 3; ++m) {
                auto g = build_gnkm(n, k, m);
                expect(gnkm_density_check(g) < k, "density check failed");
            }
    struct Big {
        int n, k, m;
    };
    for (auto [n, k, m] : {Big{20, 2, 500}, Big{12, 4, 200}, Big{18, 3, 120}}) {
        auto g = build_gnkm(n, k, m);
        expect(g.graph.n() >= 90000, "large build too small");
        auto o = acyclic_orient(g.graph, k);
        std::vector<int> indeg(g.graph.n(), 0);
        for (auto [from, to] : o.arcs) ++indeg[to];
        for (int v = 0; v < g.graph.n(); ++v) expect(indeg[v] <= k, "in-degree exceeds k");
        expect(o.arcs.size() == static_cast<std::size_t>(g.graph.e()), "missing arcs");
        if (o.globally_acyclic) {
            std::vector<int> pos(g.graph.n());
            for (int i = 0; i < g.graph.n(); ++i) pos[o.topo_order[i]] = i;
            for (auto [from, to] : o.arcs) expect(pos[from] < pos[to], "cycle in orientation");
        }
    }
}

// Verifier agrees with the classical thresholds R(K3,2) = R(C4,2) = 6.
void criterion5() {
    expect(!is_ramsey(build_complete(5), PatternSpec::clique(3), 2).is_ramsey, "K5/K3 wrong");
    expect(is_ramsey(build_complete(6), PatternSpec::clique(3), 2).is_ramsey, "K6/K3 wrong");
    expect(!is_ramsey(build_complete(5), PatternSpec::cycle(4), 2).is_ramsey, "K5/C4 wrong");
    expect(is_ramsey(build_complete(6), PatternSpec::cycle(4), 2).is_ramsey, "K6/C4 wrong");
}

// Bounds calculator reproduces the frozen regression values exactly.
void criterion6() {
    auto t = load_table_file(std::string(SOURCE_DIR) + "/data/ramsey_table.txt");
    auto rule = [](const std::vector<BoundItem>& items, const std::string& src) {
        for (const auto& b : items)
            if (b.source == src) return b;
        throw Failure("rule missing: " + src);
    };

    auto k3 = best_interval(PatternSpec::clique(3), 2, t);
    expect(k3.lower == Rational(5, 2) && *k3.upper == Rational(5, 2), "K3 interval");

    auto c4 = best_interval(PatternSpec::cycle(4), 2, t);
    expect(c4.lower == Rational(11, 6) && *c4.upper == Rational(21, 10), "C4 interval");

    for (int l = 2; l <= 5; ++l)
        for (int r = 2; r <= 3; ++r) {
            auto s = best_interval(PatternSpec::biclique(1, l), r, t);
            Rational v(std::int64_t{r} * (l - 1) + 1, std::int64_t{r} * (l - 1) + 2);
            expect(s.lower == v && *s.upper == v, "star interval");
        }

    struct EvenCase {
        int l, r;
        Rational lower;
    };
    for (auto [l, r, lower] : {EvenCase{4, 2, Rational(11, 6)}, EvenCase{4, 3, Rational(31, 11)},
                               EvenCase{6, 2, Rational(15, 8)}}) {
        auto lows = lower_bounds(PatternSpec::cycle(l), r, t);
        expect(rule(lows, "even-cycle-family").value == lower, "even-cycle lower value");
        auto ups = upper_bounds(PatternSpec::cycle(l), r, t);
        auto u1 = rule(ups, "bipartite-degree");
        expect(u1.value == Rational(r + 1) && u1.strict, "bipartite-degree upper r+1");
    }

    auto bl = lower_bounds(PatternSpec::biclique(2, 2), 2, t);
    expect(rule(bl, "biclique-family").value == Rational(11, 6), "biclique-family lower");
    auto bu = upper_bounds(PatternSpec::biclique(2, 2), 2, t);
    expect(rule(bu, "biclique-witness").value == Rational(21, 10), "biclique-witness upper");
}

// Partition engines produce detector-verified pattern-free colorings on 100
// random precondition-satisfying graphs each.
void criterion7() {
    int done = 0;
    for (unsigned seed = 0; done < 100 && seed < 5000; ++seed) {
        Graph g = random_graph(8 + static_cast<int>(seed % 8), 0.22, 30000 + seed);
        if (m_density(g).value >= Rational(11, 6)) continue;
        ++done;
        auto c = cycle_free_partition(g, 4, 2, 6);
        expect(!find_mono_copy(c, PatternSpec::cycle(4)).has_value(), "mono C4 leaked");
        auto b = biclique_free_partition(g, 2, 2, 2, 6);
        expect(!find_mono_copy(b, PatternSpec::biclique(2, 2)).has_value(), "mono K22 leaked");
    }
    expect(done == 100, "not enough sparse samples");

    for (unsigned i = 0; i < 100; ++i) {
        Graph f = random_forest(6 + static_cast<int>(i % 10), 40000 + i);
        auto c = path_free_partition(f, 3, 2, 2);
        expect(!find_mono_copy(c, PatternSpec::path(3)).has_value(), "mono P3 leaked");
    }

    done = 0;
    for (unsigned seed = 0; done < 100 && seed < 5000; ++seed) {
        Graph g = random_graph(10 + static_cast<int>(seed % 6), 0.3, 50000 + seed);
        if (m1k_density(g, 5).value > Rational(2)) continue;
        ++done;
        auto c = path_free_partition(g, 6, 4, 5);
        expect(!find_mono_copy(c, PatternSpec::path(6)).has_value(), "mono P6 leaked");
    }
    expect(done == 100, "not enough (6,4) samples");
}

// Density implication: m(G) < r - (r-1)/max{k, 2r+1} forces m1(G,k) <= r.
void criterion8() {
    for (unsigned i = 0; i < 2000; ++i) {
        int n = 3 + static_cast<int>(i % 10);
        Graph g = random_graph(n, 0.1 + 0.85 * (i % 13) / 12.0, 60000 + i);
        auto m = m_density(g).value;
        for (int k = 2; k <= 8; ++k)
            for (int r = 1; r <= 4; ++r) {
                Rational threshold = Rational(r) - Rational(r - 1, std::max(k, 2 * r + 1));
                if (m < threshold)
                    expect(m1k_density(g, k).value <= r, "implication violated");
            }
    }
}

// Orientation feasibility is exactly m1(G) <= k on every graph with <= 7
// vertices (one representative per isomorphism class).
void criterion9() {
    auto reps = nonisomorphic_upto(7);
    long long total = 0;
    for (int n = 2; n <= 7; ++n)
        for (std::uint64_t mask : reps[n]) {
            ++total;
            Graph g = graph_from_mask(n, mask);
            auto m1 = m1_density(g).value;
            for (int k = 1; k <= 4; ++k) {
                bool ok = true;
                try {
                    auto o = acyclic_orient(g, k);
                    std::vector<int> indeg(n, 0);
                    for (auto [from, to] : o.arcs) ++indeg[to];
                    for (int v = 0; v < n; ++v) expect(indeg[v] <= k, "in-degree exceeds k");
                } catch (const InfeasibleError&) {
                    ok = false;
                }
                expect(ok == (m1 <= k), "feasibility disagrees with m1");
            }
        }
    expect(total == 1251, "unexpected representative count"); // 2+4+11+34+156+1044
}

// Star-splits of every forest from the criterion-2 sweep are verified star
// forests; exact small bounded-diameter arboricity values; and the
// constructive bound a_d <= 2 a_inf on all <= 7-vertex graphs.
void criterion10() {
    for (unsigned i = 0; i < 500; ++i) {
        int n = 2 + static_cast<int>(i % 39);
        double p = 0.05 + 0.9 * (i % 11) / 10.0;
        Graph g = random_graph(n, p, 20000 + i);
        for (const auto& cls : nash_williams(g).classes) {
            auto [a, b] = split_into_star_forests(g.n(), cls);
            expect(a.size() + b.size() == cls.size(), "split loses edges");
            expect(is_star_forest_set(g.n(), a) && is_star_forest_set(g.n(), b),
                   "split class not a star forest");
        }
    }

    expect(a_d_exact(build_path(3), 2) == 2, "a_2(P3) != 2");
    expect(a_d_exact(build_star(5), 2) == 1, "a_2(star) != 1");

    auto reps = nonisomorphic_upto(7);
    for (int n = 2; n <= 7; ++n)
        for (std::uint64_t mask : reps[n]) {
            Graph g = graph_from_mask(n, mask);
            if (g.e() == 0) continue;
            auto fp = nash_williams(g); // a_inf classes
            std::vector<std::vector<Edge>> split;
            std::size_t covered = 0;
            for (const auto& cls : fp.classes) {
                auto [a, b] = split_into_star_forests(g.n(), cls);
                split.push_back(a);
                split.push_back(b);
            }
            // 2*a_inf diameter-2 classes exist, so a_d <= 2*a_inf for d in
            // {2,3,4}
            for (const auto& cls : split) {
                expect(is_star_forest_set(g.n(), cls), "class not diameter <= 2");
                covered += cls.size();
            }
            expect(covered == static_cast<std::size_t>(g.e()), "split classes lose edges");
            expect(split.size() == 2 * fp.classes.size(), "class count mismatch");
        }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1-10>\n";
        return 2;
    }
    int which = std::atoi(argv[1]);
    using Fn = void (*)();
    Fn fns[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                criterion6, criterion7, criterion8, criterion9, criterion10};
    if (which < 1 || which > 10) {
        std::cerr << "usage: acceptance <criterion 1-10>\n";
        return 2;
    }
    try {
        fns[which - 1]();
        std::cout << "criterion " << which << ": PASS\n";
        return 0;
    } catch (const std::exception& e) {
        std::cout << "criterion " << which << ": FAIL (" << e.what() << ")\n";
        return 1;
    }
}
