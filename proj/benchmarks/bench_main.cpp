#include <benchmark/benchmark.h>

#include <random>

#include "univ/embedding.hpp"
#include "univ/harness.hpp"
#include "univ/separators.hpp"
#include "univ/treewidth.hpp"

using namespace univ;

static void BM_EatIndexRoundTrip(benchmark::State& state) {
    TreeShape t(3, 10);
    i64 total = t.total();
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        i64 p = 1 + static_cast<i64>(rng() % total);
        benchmark::DoNotOptimize(eat_index(eat_at(p, t), t));
    }
}
BENCHMARK(BM_EatIndexRoundTrip);

static void BM_BuildHostMaterialized(benchmark::State& state) {
    i64 n = state.range(0);
    for (auto _ : state) {
        Host h = Host::universal(n, 3, HostOptions{.materialize_cap = 1 << 14});
        benchmark::DoNotOptimize(h.count_edges());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildHostMaterialized)->Arg(121)->Arg(1093)->Arg(3280);

static void BM_CountEdgesIntervals(benchmark::State& state) {
    i64 n = state.range(0);
    Host h = Host::universal(n, 3, HostOptions{.materialize_cap = 0});
    for (auto _ : state) benchmark::DoNotOptimize(h.count_edges());
    state.SetComplexityN(n);
}
BENCHMARK(BM_CountEdgesIntervals)->Arg(3280)->Arg(29524)->Arg(100000);

static void BM_SplitThree(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    Graph f = random_labeled_tree(n, rng);
    std::vector<int> sub(n);
    for (int i = 0; i < n; ++i) sub[i] = i;
    i64 M = n / 2, m = M / 2;
    for (auto _ : state) {
        ThreeSplit ts = split_three(f, sub, m, M);
        benchmark::DoNotOptimize(ts.f3.size());
    }
}
BENCHMARK(BM_SplitThree)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_EmbedTree(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    Graph t = random_labeled_tree(n, rng);
    Host h = Host::universal(n, 3, HostOptions{.materialize_cap = 0});
    for (auto _ : state) {
        Embedding e = embed_tree_full(h, t);
        benchmark::DoNotOptimize(e.to_host.data());
    }
}
BENCHMARK(BM_EmbedTree)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_EmbedTw(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto [g, td] = generate_partial_ktree(n, 2, 3, 0.8);
    Host h = Host::universal_tw(n, 2);
    for (auto _ : state) {
        Embedding e = embed_graph_full_tw(h, g, td);
        benchmark::DoNotOptimize(e.to_host.data());
    }
}
BENCHMARK(BM_EmbedTw)->Arg(60)->Arg(240);

BENCHMARK_MAIN();
