#include <benchmark/benchmark.h>

#include "weyltoric/chain_complex.hpp"
#include "weyltoric/coxeter.hpp"
#include "weyltoric/pipeline.hpp"
#include "weyltoric/sequences.hpp"

using namespace weyltoric;

namespace {

void BM_SpringerTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(springer_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SpringerTable)->Arg(20)->Arg(50);

void BM_EulerZigzagTable(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(euler_zigzag_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EulerZigzagTable)->Arg(20)->Arg(100);

void BM_BuildCoxeterC(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_coxeter_complex(Family::C, n));
}
BENCHMARK(BM_BuildCoxeterC)->Arg(4)->Arg(5)->Arg(6);

void BM_BuildCoxeterD(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_coxeter_complex(Family::D, n));
}
BENCHMARK(BM_BuildCoxeterD)->Arg(4)->Arg(5);

void BM_Gf2Rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto lambda = characteristic_matrix(Family::C, n);
    for (auto _ : state) benchmark::DoNotOptimize(gf2_rank_rowspace(lambda));
}
BENCHMARK(BM_Gf2Rank)->Arg(4)->Arg(6);

void BM_SubcomplexBettiQ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto k = build_coxeter_complex(Family::C, n);
    auto lambda = characteristic_matrix(k);
    auto ks = induced_subcomplex(k.complex, lambda, 1);  // the largest class
    for (auto _ : state) benchmark::DoNotOptimize(betti_reduced(ks, Coefficients::Q()));
}
BENCHMARK(BM_SubcomplexBettiQ)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_OrbitPipelineQ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            betti_real_toric(Family::C, n, Coefficients::Q(), Strategy::Orbit));
}
BENCHMARK(BM_OrbitPipelineQ)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_OrderComplexCross(benchmark::State& state) {
    const int two_r = static_cast<int>(state.range(0));
    auto poset = rank_selected_complex(RankSelectedKind::CrossOdd, two_r);
    for (auto _ : state) benchmark::DoNotOptimize(poset.order_complex());
}
BENCHMARK(BM_OrderComplexCross)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
