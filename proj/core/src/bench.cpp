#include "rule150/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rule150/eca.hpp"
#include "rule150/replicate.hpp"

namespace rule150 {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

double time_batch(const std::function<void()>& fn, std::uint64_t batch) {
    const auto start = clock_type::now();
    for (std::uint64_t i = 0; i < batch; ++i) fn();
    return seconds_since(start) / static_cast<double>(batch);
}

// Picks a batch size that keeps one timed sample above a few milliseconds
// so that short runs are timeable; the warmup run is discarded.
constexpr double kMinSampleSeconds = 1e-2;

std::uint64_t pick_batch(const std::function<void()>& fn) {
    const double warmup = time_batch(fn, 1);
    if (warmup >= kMinSampleSeconds) return 1;
    return std::min<std::uint64_t>(
        1 + static_cast<std::uint64_t>(kMinSampleSeconds / std::max(warmup, 1e-9)), 100000);
}

void validate_sizes(const std::vector<std::uint64_t>& sizes) {
    if (sizes.size() < 2) throw std::domain_error("bench requires at least two sizes");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0 || !std::has_single_bit(sizes[i]))
            throw std::domain_error("bench sizes must be powers of two");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::domain_error("bench sizes must be strictly increasing");
    }
}

// Samples all sizes of one method round-robin so that a transient system
// slowdown lands on every size roughly equally and cancels in the fitted
// ratio, then reports the per-size medians.
void bench_one_method(bench_method method, const std::function<void(std::uint64_t)>& run,
                      const std::vector<std::uint64_t>& sizes, int repetitions,
                      std::vector<bench_sample>& out) {
    if (repetitions < 1) throw std::domain_error("bench requires repetitions >= 1");

    std::vector<std::uint64_t> batches;
    for (const std::uint64_t size : sizes)
        batches.push_back(pick_batch([&run, size] { run(size); }));

    std::vector<std::vector<double>> samples(sizes.size());
    for (int rep = 0; rep < repetitions; ++rep)
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const std::uint64_t size = sizes[i];
            samples[i].push_back(time_batch([&run, size] { run(size); }, batches[i]));
        }

    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::sort(samples[i].begin(), samples[i].end());
        out.push_back({method, sizes[i], samples[i][samples[i].size() / 2]});
    }
}

// Wall-time growth per size doubling between the two largest sizes.
double fitted_doubling_ratio(const std::vector<bench_sample>& samples, bench_method method) {
    const bench_sample* prev = nullptr;
    const bench_sample* last = nullptr;
    for (const auto& s : samples) {
        if (s.method != method) continue;
        prev = last;
        last = &s;
    }
    const double raw = last->seconds / prev->seconds;
    const double doublings =
        std::log2(static_cast<double>(last->size) / static_cast<double>(prev->size));
    return std::pow(raw, 1.0 / doublings);
}

} // namespace

double median_seconds(const std::function<void()>& fn, int repetitions) {
    if (repetitions < 1) throw std::domain_error("bench requires repetitions >= 1");
    const std::uint64_t batch = pick_batch(fn);
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (int i = 0; i < repetitions; ++i) samples.push_back(time_batch(fn, batch));
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

bench_report run_scaling_bench(const bench_config& config) {
    validate_sizes(config.sizes);

    bench_report report;
    if (config.run_iteration) {
        bench_one_method(
            bench_method::iteration, [](std::uint64_t size) { activity_series(size); },
            config.sizes, config.repetitions, report.samples);
        report.iteration_ratio = fitted_doubling_ratio(report.samples, bench_method::iteration);
    }
    if (config.run_simulation) {
        bench_one_method(
            bench_method::simulation,
            [](std::uint64_t size) { simulate_activity(rule_number::rule150(), size); },
            config.sizes, config.repetitions, report.samples);
        report.simulation_ratio = fitted_doubling_ratio(report.samples, bench_method::simulation);
    }
    return report;
}

} // namespace rule150
