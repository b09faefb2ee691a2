#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rule150 {

// Accepted per-doubling wall-time growth. The string iteration does linear
// total work (ideal factor 2) and the lattice simulation quadratic (ideal
// factor 4); the bands are wide on purpose to survive noisy hardware.
inline constexpr double kIterationRatioMin = 1.5;
inline constexpr double kIterationRatioMax = 3.0;
inline constexpr double kSimulationRatioMin = 3.0;
inline constexpr double kSimulationRatioMax = 6.0;

/// Median wall-clock seconds for one invocation of fn: one discarded
/// warmup, then `repetitions` samples, each auto-batched so a sample spans
/// at least a few milliseconds.
double median_seconds(const std::function<void()>& fn, int repetitions);

enum class bench_method { iteration, simulation };

struct bench_sample {
    bench_method method;
    std::uint64_t size;
    double seconds;
};

struct bench_config {
    std::vector<std::uint64_t> sizes; // >= 2, powers of two, strictly increasing
    int repetitions = 5;
    bool run_iteration = true;
    bool run_simulation = true;
};

struct bench_report {
    std::vector<bench_sample> samples;
    // Per-doubling ratio fitted at the largest size pair (normalized by the
    // size step, so non-adjacent powers of two still yield a doubling rate).
    std::optional<double> iteration_ratio;
    std::optional<double> simulation_ratio;

    bool iteration_in_band() const {
        return iteration_ratio && *iteration_ratio >= kIterationRatioMin &&
               *iteration_ratio <= kIterationRatioMax;
    }
    bool simulation_in_band() const {
        return simulation_ratio && *simulation_ratio >= kSimulationRatioMin &&
               *simulation_ratio <= kSimulationRatioMax;
    }
};

/// Times activity_series (iteration) and simulate_activity (simulation)
/// at each size on one thread. Throws std::domain_error on a malformed
/// size list.
bench_report run_scaling_bench(const bench_config& config);

} // namespace rule150
