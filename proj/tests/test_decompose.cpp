#include <doctest.h>

#include <numeric>
#include <random>

#include <ramsey/decompose.hpp>
#include <ramsey/errors.hpp>

using namespace ramsey;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

long long ceil_of(const Rational& x) {
    return static_cast<long long>(ceil_rat(x));
}

void check_partition(const Graph& g, const ForestPartition& fp) {
    std::size_t total = 0;
    for (const auto& cls : fp.classes) {
        CHECK(is_forest(fp.n, cls));
        total += cls.size();
    }
    std::vector<Edge> all;
    for (const auto& cls : fp.classes) all.insert(all.end(), cls.begin(), cls.end());
    std::sort(all.begin(), all.end());
    CHECK(all == g.edges());
    CHECK(total == static_cast<std::size_t>(g.e()));
}

} // namespace

TEST_CASE("forest partition on fixed graphs") {
    Graph k4 = build_complete(4);
    auto fp = nash_williams(k4);
    CHECK(fp.classes.size() == 2);
    check_partition(k4, fp);

    auto single = nash_williams(build_path(6));
    CHECK(single.classes.size() == 1);

    MultiGraph triple(2, {{{0, 1}, 3}});
    auto three = nash_williams(triple);
    CHECK(three.classes.size() == 3);
    for (const auto& cls : three.classes) CHECK(cls.size() == 1);

    CHECK(nash_williams(Graph(5, {})).classes.empty());
}

TEST_CASE("forest partition matches ceil(m1) on random graphs") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(6 + static_cast<int>(seed % 10), 0.1 + 0.08 * (seed % 8), seed);
        if (g.n() < 2) continue;
        auto fp = nash_williams(g);
        if (g.e() == 0) {
            CHECK(fp.classes.empty());
            continue;
        }
        check_partition(g, fp);
        CHECK(static_cast<long long>(fp.classes.size()) == ceil_of(m1_density(g).value));
    }
}

TEST_CASE("star forest split") {
    // a path of 3 edges is not a star but splits into two star forests
    Graph p3 = build_path(3);
    auto [s0, s1] = split_into_star_forests(p3.n(), p3.edges());
    CHECK(s0.size() + s1.size() == 3);
    CHECK(is_star_forest(p3.n(), s0));
    CHECK(is_star_forest(p3.n(), s1));
    CHECK(!is_star_forest(p3.n(), p3.edges()));

    Graph star = build_star(5);
    auto [t0, t1] = split_into_star_forests(star.n(), star.edges());
    CHECK(is_star_forest(star.n(), t0));
    CHECK(is_star_forest(star.n(), t1));
    CHECK(t0.size() + t1.size() == 5);
    CHECK((t0.empty() || t1.empty())); // a star stays in one class

    CHECK_THROWS(split_into_star_forests(3, build_complete(3).edges()));

    for (unsigned seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(12, 0.25, 600 + seed);
        for (const auto& cls : nash_williams(g).classes) {
            auto [a, b] = split_into_star_forests(g.n(), cls);
            CHECK(a.size() + b.size() == cls.size());
            CHECK(is_star_forest(g.n(), a));
            CHECK(is_star_forest(g.n(), b));
        }
    }
}

TEST_CASE("bounded in-degree orientation") {
    auto check_orient = [](const Graph& g, const Orientation& o, int k) {
        CHECK(o.arcs.size() == static_cast<std::size_t>(g.e()));
        std::vector<int> indeg(g.n(), 0);
        for (auto [from, to] : o.arcs) ++indeg[to];
        for (int v = 0; v < g.n(); ++v) CHECK(indeg[v] <= k);
        CHECK(o.max_indegree <= k);
        if (o.globally_acyclic) {
            std::vector<int> pos(g.n());
            for (int i = 0; i < g.n(); ++i) pos[o.topo_order[i]] = i;
            for (auto [from, to] : o.arcs) CHECK(pos[from] < pos[to]);
        }
    };

    Graph k4 = build_complete(4);
    auto o = acyclic_orient(k4, 2);
    check_orient(k4, o, 2);

    Graph tree = build_path(9);
    auto ot = acyclic_orient(tree, 1);
    check_orient(tree, ot, 1);
    CHECK(ot.globally_acyclic);

    CHECK_THROWS_AS(acyclic_orient(build_complete(5), 2), InfeasibleError);
    try {
        acyclic_orient(build_complete(5), 2);
    } catch (const InfeasibleError& e) {
        CHECK(e.witness == std::vector<int>{0, 1, 2, 3, 4});
    }

    // feasible exactly when m1 <= k, spot-checked on random graphs
    for (unsigned seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(8, 0.4, 900 + seed);
        if (g.n() < 2) continue;
        auto m1 = m1_density(g).value;
        for (int k = 1; k <= 3; ++k) {
            if (m1 <= k) {
                check_orient(g, acyclic_orient(g, k), k);
            } else {
                CHECK_THROWS_AS(acyclic_orient(g, k), InfeasibleError);
            }
        }
    }
}

TEST_CASE("exact bounded-diameter arboricity") {
    CHECK(a_d_exact(build_star(5), 2) == 1);
    CHECK(a_d_exact(build_path(3), 2) == 2);
    CHECK(a_d_exact(build_path(3), kDiameterUnbounded) == 1);
    CHECK(a_d_exact(build_path(7), kDiameterUnbounded) == 1);
    CHECK(a_d_exact(build_complete(4), kDiameterUnbounded) == 2);
    CHECK_THROWS_AS(a_d_exact(build_complete(7), 2), SizeLimitError);
}
