#include <benchmark/benchmark.h>

#include <random>

#include "cutcactus/balance.hpp"
#include "cutcactus/instance_gen.hpp"
#include "cutcactus/kernel.hpp"
#include "cutcactus/pipeline.hpp"

namespace {

using namespace cutcactus;

void BM_Kernelize(benchmark::State& state) {
    std::mt19937_64 rng(1);
    NodeId clusters = static_cast<NodeId>(state.range(0));
    StaticGraph g = cluster_bridge_graph(clusters, 40, 12, rng);
    for (auto _ : state) {
        KernelResult kr = kernelize(g);
        benchmark::DoNotOptimize(kr.graph.num_vertices());
    }
    state.SetLabel("n=" + std::to_string(g.num_vertices()) +
                   " m=" + std::to_string(g.num_edges()));
}
BENCHMARK(BM_Kernelize)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_FindAllMincutsCycle(benchmark::State& state) {
    StaticGraph g = cycle_graph(static_cast<NodeId>(state.range(0)));
    RunConfig cfg;
    for (auto _ : state) {
        PipelineResult res = find_all_mincuts(g, cfg);
        benchmark::DoNotOptimize(res.cactus.num_nodes());
    }
}
BENCHMARK(BM_FindAllMincutsCycle)->Arg(100)->Arg(1000)
    ->Unit(benchmark::kMillisecond);

void BM_FindAllMincutsClusters(benchmark::State& state) {
    std::mt19937_64 rng(2);
    StaticGraph g = cluster_bridge_graph(
        static_cast<NodeId>(state.range(0)), 40, 12, rng);
    RunConfig cfg;
    for (auto _ : state) {
        PipelineResult res = find_all_mincuts(g, cfg);
        benchmark::DoNotOptimize(res.lambda);
    }
    state.SetLabel("n=" + std::to_string(g.num_vertices()) +
                   " m=" + std::to_string(g.num_edges()));
}
BENCHMARK(BM_FindAllMincutsClusters)->Arg(100)->Arg(500)
    ->Unit(benchmark::kMillisecond);

void BM_MostBalancedCut(benchmark::State& state) {
    std::mt19937_64 rng(3);
    StaticGraph g = random_tree(static_cast<NodeId>(state.range(0)), rng);
    RunConfig cfg;
    PipelineResult res = find_all_mincuts(g, cfg);
    for (auto _ : state) {
        CutSelection sel = most_balanced_cut(res.cactus, g.num_vertices());
        benchmark::DoNotOptimize(sel.objective);
    }
}
BENCHMARK(BM_MostBalancedCut)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
