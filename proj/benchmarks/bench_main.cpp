#include <benchmark/benchmark.h>

#include "grundy/binomial.hpp"
#include "grundy/coloring.hpp"
#include "grundy/decomposition.hpp"
#include "grundy/generators.hpp"
#include "grundy/reductions.hpp"
#include "grundy/solver_dp.hpp"
#include "grundy/solver_modular.hpp"

using namespace grundy;

static void BM_FirstFit(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 20, 1);
    auto order = random_permutation(g.vertex_count(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(first_fit(g, order).max_color);
}
BENCHMARK(BM_FirstFit)->Arg(200)->Arg(1000);

static void BM_GammaExact(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 35, 3);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g));
}
BENCHMARK(BM_GammaExact)->Arg(10)->Arg(14);

static void BM_GammaOrderings(benchmark::State& state) {
    Graph g = random_graph(8, 40, 4);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_orderings(g));
}
BENCHMARK(BM_GammaOrderings);

static void BM_GammaTw(benchmark::State& state) {
    Graph g = random_graph(11, 25, 5);
    auto [w, td] = exact_treewidth(g);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_tw(g, td));
}
BENCHMARK(BM_GammaTw);

static void BM_GammaNd(benchmark::State& state) {
    Graph g = random_bounded_nd(4, 4, 6);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_nd(g).gamma);
}
BENCHMARK(BM_GammaNd);

static void BM_BuildMcc(benchmark::State& state) {
    MccInstance inst;
    inst.k = 3;
    inst.n = 2;
    inst.edges = {{0, 0, 1, 0}, {0, 0, 2, 0}, {1, 0, 2, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(build_mcc_pipeline(inst).fill.h.vertex_count());
}
BENCHMARK(BM_BuildMcc);

static void BM_BuildSat(benchmark::State& state) {
    CnfFormula f;
    f.var_count = 3;
    f.clauses.push_back({{1, -2, 3}});
    for (auto _ : state) benchmark::DoNotOptimize(build_sat_reduction(f).graph.vertex_count());
}
BENCHMARK(BM_BuildSat);

BENCHMARK_MAIN();
