#include <benchmark/benchmark.h>
#include <ramsey/density.hpp>
#include <ramsey/decompose.hpp>
#include <ramsey/color.hpp>
#include <ramsey/pattern.hpp>

#include <random>

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

void bm_m_density(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 12345);
    for (auto _ : state) {
        auto res = m_density(g);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(bm_m_density)->Arg(20)->Arg(40)->Arg(60);

void bm_nash_williams(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 777);
    for (auto _ : state) {
        auto forests = nash_williams(g);
        benchmark::DoNotOptimize(forests);
    }
}
BENCHMARK(bm_nash_williams)->Arg(20)->Arg(40)->Arg(60);

void bm_is_ramsey(benchmark::State& state) {
    Graph g = build_complete(static_cast<int>(state.range(0)));
    PatternSpec f = PatternSpec::clique(3);
    for (auto _ : state) {
        auto verdict = is_ramsey(g, f, 2);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(bm_is_ramsey)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
