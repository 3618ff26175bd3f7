#include <benchmark/benchmark.h>

#include <random>

#include "unigraph/coloring.hpp"
#include "unigraph/isomorphism.hpp"
#include "unigraph/realizations.hpp"
#include "unigraph/search.hpp"
#include "unigraph/tree.hpp"

namespace {

using namespace unigraph;

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v});
    }
    return Graph(n, std::move(edges));
}

Graph domino() { return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}); }

void BM_CanonicalCode(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(static_cast<int>(state.range(0)), 0.4, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_CanonicalCode)->DenseRange(6, 12, 2);

void BM_EnumerateRealizations(benchmark::State& state) {
    DegreeSet ds{{3, 3, 2, 2, 2, 2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_realizations(ds));
    }
}
BENCHMARK(BM_EnumerateRealizations);

void BM_UnigraphNumberDomino(benchmark::State& state) {
    Graph dom = domino();
    for (auto _ : state) {
        SearchContext ctx;
        benchmark::DoNotOptimize(unigraph_number(dom, {}, &ctx));
    }
}
BENCHMARK(BM_UnigraphNumberDomino);

void BM_TreeUnigraphNumber(benchmark::State& state) {
    std::mt19937_64 rng(7);
    Graph tree = random_tree(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_unigraph_number(tree));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeUnigraphNumber)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
