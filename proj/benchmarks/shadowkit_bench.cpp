#include <benchmark/benchmark.h>

#include "shadowkit/binomial.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit/search.hpp"
#include "shadowkit/seq.hpp"

using namespace shadowkit;

namespace {

void BM_Shadow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KFamily layer = full_layer(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(shadow(layer).size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layer.size()));
}
BENCHMARK(BM_Shadow)->Arg(12)->Arg(16)->Arg(20);

void BM_Decompose(benchmark::State& state) {
    const ExactInt m = binom(120, 4) + 12345;
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m, state.range(0)));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8)->Arg(16);

void BM_BruteForceMinShadow(benchmark::State& state) {
    const auto m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_shadow(6, 3, m));
}
BENCHMARK(BM_BruteForceMinShadow)->Arg(5)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Characterize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KFamily seg = initial_segment(n, 3, binom(n, 3) - 3);
    for (auto _ : state) benchmark::DoNotOptimize(characterize(seg).verdict);
}
BENCHMARK(BM_Characterize)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EnumerateExtremal(benchmark::State& state) {
    const auto method = state.range(0) == 0 ? EnumerationMethod::exhaustive : EnumerationMethod::recursive;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extremal(6, 3, 12, true, method).size());
}
BENCHMARK(BM_EnumerateExtremal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
