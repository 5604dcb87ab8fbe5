#include <doctest.h>

#include <random>
#include <stdexcept>

#include <ramsey/color.hpp>
#include <ramsey/constructions.hpp>
#include <ramsey/density.hpp>
#include <ramsey/errors.hpp>

using namespace ramsey;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({0, 0}), edges.back() = {u, v};
    return Graph(n, edges);
}

EdgeColoring mono(const Graph& g, int r = 1) {
    return EdgeColoring(g, r, std::vector<int>(g.e(), 0));
}

// re-check a witness independently of the detector internals
void check_witness(const EdgeColoring& c, const PatternSpec& f, const MonoWitness& w) {
    Graph pat = f.realize();
    REQUIRE(w.vertices.size() == static_cast<std::size_t>(pat.n()));
    for (auto [u, v] : pat.edges()) {
        int gu = w.vertices[u], gv = w.vertices[v];
        CHECK(c.host.has_edge(gu, gv));
        CHECK(c.color_of(gu, gv) == w.color);
    }
}

} // namespace

TEST_CASE("monochromatic pattern detectors") {
    Graph k6 = build_complete(6);
    auto w = find_mono_copy(mono(k6), PatternSpec::clique(3));
    REQUIRE(w.has_value());
    check_witness(mono(k6), PatternSpec::clique(3), *w);

    // alternating 2-coloring of C4: each class is a perfect matching
    EdgeColoring alt(build_cycle(4), 2, {0, 1, 1, 0});
    CHECK(!find_mono_copy(alt, PatternSpec::path(2)).has_value());
    CHECK(find_mono_copy(alt, PatternSpec::path(1)).has_value());

    CHECK(find_mono_copy(mono(build_cycle(5)), PatternSpec::cycle(5)).has_value());
    CHECK(!find_mono_copy(mono(build_cycle(5)), PatternSpec::cycle(4)).has_value());
    CHECK(!find_mono_copy(mono(build_cycle(5)), PatternSpec::cycle(3)).has_value());

    CHECK(find_mono_copy(mono(build_complete_bipartite(3, 4)), PatternSpec::biclique(2, 3))
              .has_value());
    CHECK(!find_mono_copy(mono(build_complete_bipartite(3, 4)), PatternSpec::clique(3))
               .has_value());
    // biclique detection must catch both side orientations
    auto wb = find_mono_copy(mono(build_complete_bipartite(4, 2)), PatternSpec::biclique(2, 3));
    REQUIRE(wb.has_value());

    CHECK(find_mono_copy(mono(build_path(5)), PatternSpec::path(5)).has_value());
    CHECK(!find_mono_copy(mono(build_path(5)), PatternSpec::path(6)).has_value());

    // explicit pattern: the paw (triangle plus pendant)
    auto paw = PatternSpec::explicit_graph(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
    Graph host(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}});
    auto we = find_mono_copy(mono(host), paw);
    REQUIRE(we.has_value());
    check_witness(mono(host), paw, *we);
    CHECK(!find_mono_copy(mono(build_cycle(6)), paw).has_value());
}

TEST_CASE("exhaustive Ramsey verification") {
    auto v6 = is_ramsey(build_complete(6), PatternSpec::clique(3), 2);
    CHECK(v6.is_ramsey);
    auto v5 = is_ramsey(build_complete(5), PatternSpec::clique(3), 2);
    CHECK(!v5.is_ramsey);
    REQUIRE(v5.certificate.has_value());
    CHECK(!find_mono_copy(*v5.certificate, PatternSpec::clique(3)).has_value());

    auto pw = is_ramsey(p3_witness(), PatternSpec::path(3), 2);
    CHECK(pw.is_ramsey);

    // a C4 cannot force a monochromatic P2 in 2 colors
    CHECK(!is_ramsey(build_cycle(4), PatternSpec::path(2), 2).is_ramsey);

    // tight budget aborts instead of answering
    CHECK_THROWS_AS(is_ramsey(build_complete(6), PatternSpec::clique(3), 2, 10),
                    BudgetExhaustedError);
}

TEST_CASE("degeneracy-bounded greedy coloring") {
    // K4, r=3, delta=2: every class must be a forest
    Graph k4 = build_complete(4);
    auto c = greedy_backdegree_coloring(k4, 3, 2);
    for (int cls = 0; cls < 3; ++cls) {
        std::vector<Edge> es;
        for (int i = 0; i < k4.e(); ++i)
            if (c.colors[i] == cls) es.push_back(k4.edges()[i]);
        Graph sub(k4.n(), es);
        CHECK(degeneracy_order(sub).degeneracy <= 1);
    }
    CHECK_THROWS_AS(greedy_backdegree_coloring(build_complete(5), 2, 2), std::invalid_argument);

    Graph tree = build_path(6);
    auto tc = greedy_backdegree_coloring(tree, 2, 2);
    CHECK(tc.colors.size() == 6);
}

TEST_CASE("small pattern-free coloring search") {
    auto c = ffree_coloring_small(build_complete(5), PatternSpec::clique(3), 2);
    REQUIRE(c.has_value());
    CHECK(!find_mono_copy(*c, PatternSpec::clique(3)).has_value());

    auto c4 = ffree_coloring_small(build_complete(5), PatternSpec::cycle(4), 2);
    REQUIRE(c4.has_value());
    CHECK(!find_mono_copy(*c4, PatternSpec::cycle(4)).has_value());

    // K6 is Ramsey for K3, so no good 2-coloring exists
    CHECK(!ffree_coloring_small(build_complete(6), PatternSpec::clique(3), 2).has_value());

    auto e = ffree_coloring_small(Graph(2, {{0, 1}}), PatternSpec::path(2), 1);
    REQUIRE(e.has_value());

    CHECK_THROWS_AS(ffree_coloring_small(build_complete(9), PatternSpec::clique(3), 2),
                    SizeLimitError);
}

TEST_CASE("cycle-free partition engine") {
    Graph k4 = build_complete(4);
    auto c = cycle_free_partition(k4, 4, 2, 6);
    CHECK(c.r == 2);
    CHECK(!find_mono_copy(c, PatternSpec::cycle(4)).has_value());

    Graph forest = build_path(8);
    auto cf = cycle_free_partition(forest, 3, 1, 6);
    CHECK(!find_mono_copy(cf, PatternSpec::cycle(3)).has_value());

    // dense graph violating m1(G,R) <= r is rejected
    CHECK_THROWS_AS(cycle_free_partition(build_complete(8), 4, 2, 6), std::invalid_argument);
}

TEST_CASE("biclique-free partition engine") {
    auto c = biclique_free_partition(build_complete(5), 2, 2, 2, 6);
    CHECK(!find_mono_copy(c, PatternSpec::biclique(2, 2)).has_value());

    CHECK_THROWS_AS(biclique_free_partition(build_complete(5), 3, 2, 2, 6),
                    std::invalid_argument); // b < (a-1)^2+1

    auto cf = biclique_free_partition(build_path(5), 2, 2, 2, 6);
    CHECK(!find_mono_copy(cf, PatternSpec::biclique(2, 2)).has_value());
}

TEST_CASE("path-free partition engine") {
    CHECK_THROWS_AS(path_free_partition(build_complete(4), 3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(path_free_partition(build_path(4), 3, 3, 2), std::invalid_argument); // odd r

    auto c = path_free_partition(build_path(6), 3, 2, 2);
    CHECK(c.r == 2);
    CHECK(!find_mono_copy(c, PatternSpec::path(3)).has_value());

    auto cs = path_free_partition(build_star(4), 3, 2, 2);
    CHECK(!find_mono_copy(cs, PatternSpec::path(3)).has_value());
}

TEST_CASE("engine soundness on random sparse graphs") {
    int done = 0;
    for (unsigned seed = 0; done < 15 && seed < 400; ++seed) {
        Graph g = random_graph(10, 0.22, 5000 + seed);
        if (m_density(g).value >= Rational(11, 6)) continue;
        ++done;
        auto c = cycle_free_partition(g, 4, 2, 6);
        CHECK(!find_mono_copy(c, PatternSpec::cycle(4)).has_value());
        auto b = biclique_free_partition(g, 2, 2, 2, 6);
        CHECK(!find_mono_copy(b, PatternSpec::biclique(2, 2)).has_value());
    }
    CHECK(done == 15);
}

TEST_CASE("star coloring extraction") {
    // every fiber colorful in the same color order: extraction must succeed
    FiberedGraph g = build_gnkm(3, 2, 4);
    std::vector<int> colors(g.graph.e(), -1);
    auto paint = [&](int u, int v, int c) {
        for (int i = 0; i < g.graph.e(); ++i)
            if (g.graph.edges()[i] == Edge{std::min(u, v), std::max(u, v)}) colors[i] = c;
    };
    for (const auto& [subset, verts] : g.fibers)
        for (int w : verts) {
            paint(subset[0], w, 0);
            paint(subset[1], w, 1);
        }
    EdgeColoring c(g.graph, 2, colors);
    auto res = extract_star_coloring(g, c, 3, 2);
    REQUIRE(res.has_value());
    CHECK(res->a.size() == 2);
    CHECK(res->b.size() == 2);
    // verify the star predicate: each color's edges in G[A u B] share one
    // center in A, and every B vertex sees both colors
    for (int color = 0; color < 2; ++color) {
        int center = -1;
        for (int av : res->a)
            for (int bv : res->b)
                if (c.host.has_edge(av, bv) && c.color_of(av, bv) == color) {
                    if (center == -1) center = av;
                    CHECK(center == av);
                }
        CHECK(center != -1);
    }
    for (int bv : res->b) {
        std::set<int> seen;
        for (int av : res->a)
            if (c.host.has_edge(av, bv)) seen.insert(c.color_of(av, bv));
        CHECK(seen.size() == 2);
    }

    // single-copy fibers with scrambled color orders: s=2 unreachable
    FiberedGraph g1 = build_gnkm(3, 2, 1);
    std::vector<int> cols1(g1.graph.e(), -1);
    auto paint1 = [&](int u, int v, int c2) {
        for (int i = 0; i < g1.graph.e(); ++i)
            if (g1.graph.edges()[i] == Edge{std::min(u, v), std::max(u, v)}) cols1[i] = c2;
    };
    int flip = 0;
    for (const auto& [subset, verts] : g1.fibers) {
        paint1(subset[0], verts[0], flip % 2);
        paint1(subset[1], verts[0], 1 - flip % 2);
        ++flip;
    }
    EdgeColoring c1(g1.graph, 2, cols1);
    CHECK(!extract_star_coloring(g1, c1, 3, 2).has_value());
}
