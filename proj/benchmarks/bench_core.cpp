#include <benchmark/benchmark.h>

#include "cycinv/commutative.hpp"
#include "cycinv/group_actions.hpp"
#include "cycinv/invariant_core.hpp"
#include "cycinv/s_algebra.hpp"

using namespace cycinv;

static void BM_HilbertCoefficients(benchmark::State& state) {
    const RationalSeries series = cyclic_hilbert_series(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(series.coefficients(64));
}
BENCHMARK(BM_HilbertCoefficients)->Arg(3)->Arg(5);

static void BM_BruteforceDimension(benchmark::State& state) {
    const auto group = cyclic_group(static_cast<int>(state.range(0)));
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_dimension_bruteforce(group, degree));
}
BENCHMARK(BM_BruteforceDimension)->Args({3, 4})->Args({4, 4});

static void BM_CommutativeMolien(benchmark::State& state) {
    const auto group = diagonal_cyclic_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(commutative_molien_series(group));
}
BENCHMARK(BM_CommutativeMolien)->Arg(4)->Arg(6);

static void BM_SComponentSpan(benchmark::State& state) {
    const auto gens = cyclic_s_generators(3);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s_component_span(gens, degree).rank());
}
BENCHMARK(BM_SComponentSpan)->Arg(3)->Arg(4)->Arg(5);

static void BM_MinimalGenerators(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_monoid_generators(d));
}
BENCHMARK(BM_MinimalGenerators)->Arg(4)->Arg(6);

static void BM_GenerationClosure(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generation_closure_check(d, 2 * d));
}
BENCHMARK(BM_GenerationClosure)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
