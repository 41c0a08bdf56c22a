#include <benchmark/benchmark.h>

#include "monadforge/certificates.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/field.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/polarization.hpp"
#include "monadforge/verify.hpp"

using namespace monadforge;

namespace {

SpaceSpec space_arg(int which) {
    switch (which) {
    case 0: return SpaceSpec({1, 3});
    case 1: return SpaceSpec({1, 2, 3});
    default: return SpaceSpec({1, 3, 5});
    }
}

void BM_BuildMonad(benchmark::State& state) {
    const auto space = space_arg(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_monad(space, 2));
}
BENCHMARK(BM_BuildMonad)->DenseRange(0, 2);

void BM_CompositionZero(benchmark::State& state) {
    const auto monad = build_monad(space_arg(static_cast<int>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_composition_zero(monad));
}
BENCHMARK(BM_CompositionZero)->DenseRange(0, 2);

void BM_ExhaustiveF2(benchmark::State& state) {
    const auto monad = build_monad(space_arg(static_cast<int>(state.range(0))), 1);
    VerifierOptions options;
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_fiber_check(monad, 2, options));
}
BENCHMARK(BM_ExhaustiveF2)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_RandomQ(benchmark::State& state) {
    const auto monad = build_monad(SpaceSpec({1, 2, 3}), 2);
    VerifierOptions options;
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(random_fiber_check(monad, 16, 7, options));
}
BENCHMARK(BM_RandomQ)->Unit(benchmark::kMillisecond);

void BM_RankBareiss(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Integer(static_cast<long>((i * 7 + j * 13) % 19) - 9);
    for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m));
}
BENCHMARK(BM_RankBareiss)->RangeMultiplier(2)->Range(8, 32);

void BM_Kunneth(benchmark::State& state) {
    const SpaceSpec space({1, 1, 1, 3, 5});
    const MultiDegree twist{-2, 0, 0, -4, -6};
    for (auto _ : state) benchmark::DoNotOptimize(kunneth_table(space, twist));
}
BENCHMARK(BM_Kunneth);

void BM_DeltaL(benchmark::State& state) {
    const SpaceSpec space({1, 3, 5});
    const MultiDegree d{1, -2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(delta_L(space, d));
}
BENCHMARK(BM_DeltaL);

void BM_StabilityCertificate(benchmark::State& state) {
    const auto params = monad_params(space_arg(static_cast<int>(state.range(0))), 1);
    for (auto _ : state) benchmark::DoNotOptimize(stability_certificate(params, 2));
}
BENCHMARK(BM_StabilityCertificate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
