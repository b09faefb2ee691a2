// google-benchmark harness for the activity routes. The string iteration
// should scale linearly in the series length, the lattice simulation
// quadratically, and the closed form ~log per value.

#include <benchmark/benchmark.h>

#include "rule150/blocksum.hpp"
#include "rule150/eca.hpp"
#include "rule150/replicate.hpp"
#include "rule150/spin.hpp"

namespace {

void BM_ActivitySeries(benchmark::State& state) {
    const std::uint64_t count = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto series = rule150::activity_series(count);
        benchmark::DoNotOptimize(series.values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(count));
}
BENCHMARK(BM_ActivitySeries)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);

void BM_SimulateActivity(benchmark::State& state) {
    const std::uint64_t rows = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto activities = rule150::simulate_activity(rule150::rule_number::rule150(), rows);
        benchmark::DoNotOptimize(activities.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_SimulateActivity)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_ClosedForm(benchmark::State& state) {
    const std::uint64_t count = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint64_t t = 0; t < count; ++t) acc ^= rule150::activity_closed_form(t);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_PolynomialRow(benchmark::State& state) {
    const std::uint64_t t = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto row = rule150::row150_polynomial(t);
        benchmark::DoNotOptimize(row.words().data());
    }
}
BENCHMARK(BM_PolynomialRow)->RangeMultiplier(4)->Range(1 << 6, 1 << 12);

void BM_BlockSums(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (unsigned n = 0; n <= 37; ++n) acc ^= rule150::block_sum(n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BlockSums);

} // namespace

BENCHMARK_MAIN();
