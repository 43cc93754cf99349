// Side-by-side timings for the sigma-table algorithms: the divisor sieve
// (O(N log N) additions), the pentagonal recurrence (O(N^1.5) additions)
// and per-n factorization, plus the series routes at fixed order.

#include <benchmark/benchmark.h>

#include "divisum/divisors.hpp"
#include "divisum/recurrence.hpp"
#include "divisum/series.hpp"

using divisum::Natural;

static void BM_TableSieve(benchmark::State& state) {
    const auto max_n = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto table = divisum::sigma_table_sieve(max_n);
        benchmark::DoNotOptimize(table.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TableSieve)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

static void BM_TableRecurrence(benchmark::State& state) {
    const auto max_n = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto table = divisum::sigma_table_recurrence(max_n);
        benchmark::DoNotOptimize(table.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TableRecurrence)->RangeMultiplier(8)->Range(1 << 10, 1 << 17);

static void BM_TableFactorized(benchmark::State& state) {
    const auto max_n = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto table = divisum::sigma_table_factorized(max_n);
        benchmark::DoNotOptimize(table.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TableFactorized)->RangeMultiplier(8)->Range(1 << 10, 1 << 17);

static void BM_SigmaFactored(benchmark::State& state) {
    const auto n = static_cast<Natural>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(divisum::sigma_factored(divisum::factorize(n)));
}
BENCHMARK(BM_SigmaFactored)->Arg(963761198400)->Arg(9999999967)->Arg(101);

static void BM_SigmaTrial(benchmark::State& state) {
    const auto n = static_cast<Natural>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(divisum::sigma_trial(n));
}
BENCHMARK(BM_SigmaTrial)->Arg(963761198400)->Arg(9999999967)->Arg(101);

static void BM_EulerProduct(benchmark::State& state) {
    const auto order = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto s = divisum::euler_product(order);
        benchmark::DoNotOptimize(s.coeffs.data());
    }
}
BENCHMARK(BM_EulerProduct)->RangeMultiplier(4)->Range(128, 2048);

static void BM_LogDerivativeSigma(benchmark::State& state) {
    const auto order = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto s = divisum::log_derivative_sigma(order);
        benchmark::DoNotOptimize(s.coeffs.data());
    }
}
BENCHMARK(BM_LogDerivativeSigma)->RangeMultiplier(4)->Range(128, 2048);

static void BM_LambertSigma(benchmark::State& state) {
    const auto order = static_cast<Natural>(state.range(0));
    for (auto _ : state) {
        auto s = divisum::lambert_sigma(order);
        benchmark::DoNotOptimize(s.coeffs.data());
    }
}
BENCHMARK(BM_LambertSigma)->RangeMultiplier(4)->Range(128, 2048);

BENCHMARK_MAIN();
