#include <benchmark/benchmark.h>

#include <lcc/oracle.hpp>
#include <lcc/orderings.hpp>
#include <lcc/recognizer.hpp>
#include <lcc/structure.hpp>

using namespace lcc;

namespace {

// Staircase PIG with average degree about 20.
Graph staircase(int n) { return generate({.family = "staircase-pig", .n = n, .seed = 7, .width = 13}).graph; }

void BM_RecognizeStaircase(benchmark::State& state) {
    const Graph g = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
    state.counters["edges"] = g.size();
    state.SetComplexityN(g.size());
}
BENCHMARK(BM_RecognizeStaircase)->RangeMultiplier(2)->Range(250, 4000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_RecognizeGnp(benchmark::State& state) {
    Rng rng(11);
    const int n = static_cast<int>(state.range(0));
    const Graph g = gnp(n, 20.0 / n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
}
BENCHMARK(BM_RecognizeGnp)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_CountColourings(benchmark::State& state) {
    const Graph g = staircase(2000);
    for (auto _ : state) benchmark::DoNotOptimize(count_colourings(g));
}
BENCHMARK(BM_CountColourings)->Unit(benchmark::kMillisecond);

void BM_FindStraight(benchmark::State& state) {
    const Graph g = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_straight(g));
}
BENCHMARK(BM_FindStraight)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_FindRound(benchmark::State& state) {
    const Graph g = generate({.family = "circular-arc-pca", .n = static_cast<int>(state.range(0)), .p = 0.3, .seed = 3}).graph;
    for (auto _ : state) benchmark::DoNotOptimize(find_round(g));
}
BENCHMARK(BM_FindRound)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_StructuralStaircase(benchmark::State& state) {
    const Graph g = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(structural_recognize(g));
}
BENCHMARK(BM_StructuralStaircase)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const Graph g = paper_instance("F3");
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_colourings(g, 1));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
