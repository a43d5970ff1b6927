#include <benchmark/benchmark.h>

#include "tetherplan/generator.hpp"
#include "tetherplan/minlink.hpp"
#include "tetherplan/oracle.hpp"

namespace {

using namespace tetherplan;

Instance make_instance(std::size_t n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.n_segments = n;
    cfg.alpha = Rat(1);
    cfg.vertical_budget = Rat(2);
    cfg.seed = seed;
    return gen_instance(cfg);
}

void BM_BuildCorridor(benchmark::State& state) {
    Instance inst = make_instance(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        Corridor c = build_corridor(inst);
        benchmark::DoNotOptimize(c.lower_reflex.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildCorridor)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_MinSlopeLinear(benchmark::State& state) {
    Instance inst = make_instance(static_cast<std::size_t>(state.range(0)), 7);
    Corridor c = build_corridor(inst);
    for (auto _ : state) {
        SlopeSolution sol = min_slope_linear(c);
        benchmark::DoNotOptimize(sol.beta_star);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinSlopeLinear)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_MinSlopeBruteforce(benchmark::State& state) {
    Instance inst = make_instance(static_cast<std::size_t>(state.range(0)), 7);
    Corridor c = build_corridor(inst);
    for (auto _ : state) {
        SlopeSolution sol = min_slope_bruteforce(c);
        benchmark::DoNotOptimize(sol.beta_star);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinSlopeBruteforce)->RangeMultiplier(4)->Range(250, 4000)->Complexity();

void BM_GreedyPath(benchmark::State& state) {
    Instance inst = make_instance(static_cast<std::size_t>(state.range(0)), 7);
    Corridor c = build_corridor(inst);
    SlopeSolution sol = min_slope_linear(c);
    for (auto _ : state) {
        BetaPath path = build_min_link_path(c, sol);
        benchmark::DoNotOptimize(path.links());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyPath)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_FunnelFeasibility(benchmark::State& state) {
    Instance inst = make_instance(static_cast<std::size_t>(state.range(0)), 7);
    Corridor c = build_corridor(inst);
    Rat beta(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasible_slope(c, beta));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FunnelFeasibility)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
