// Serial vs OpenMP oracles: cut-probability trials and weak-diameter sources.
#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "negpath/generators.hpp"
#include "negpath/oracle.hpp"

namespace {

const negpath::Graph &cycle_graph() {
    static const negpath::Graph g = negpath::to_graph(negpath::gen::dicycle(256));
    return g;
}

const negpath::Graph &grid_graph() {
    static const negpath::Graph g = negpath::to_graph(negpath::gen::grid(32, 32, 8, 3));
    return g;
}

void BM_CutProbSerial(benchmark::State &state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(negpath::oracle::estimate_cut_prob(cycle_graph(), 64, state.range(0), 7));
}

void BM_CutProbParallel(benchmark::State &state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(negpath::oracle::estimate_cut_prob_parallel(cycle_graph(), 64, state.range(0), 7));
}

std::vector<negpath::VertexId> all_vertices(const negpath::Graph &g) {
    std::vector<negpath::VertexId> u(static_cast<std::size_t>(g.n()));
    std::iota(u.begin(), u.end(), 0);
    return u;
}

void BM_WeakDiameterSerial(benchmark::State &state) {
    const auto u = all_vertices(grid_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(negpath::oracle::weak_diameter(grid_graph(), u));
}

void BM_WeakDiameterParallel(benchmark::State &state) {
    const auto u = all_vertices(grid_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(negpath::oracle::weak_diameter_parallel(grid_graph(), u));
}

}  // namespace

BENCHMARK(BM_CutProbSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CutProbParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakDiameterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakDiameterParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
