// rule150 -- exact activity series of the single-seeded rule 150 automaton.
//
// Subcommands: series, at, verify, blocksums, rule, render, bench.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 arithmetic overflow. Every nonzero exit prints one line on stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rule150/bench.hpp"
#include "rule150/blocksum.hpp"
#include "rule150/eca.hpp"
#include "rule150/replicate.hpp"
#include "rule150/spin.hpp"
#include "rule150/verify.hpp"

namespace {

using namespace rule150;

void error_line(const std::string& kind, const std::string& message) {
    std::cerr << "rule150: " << kind << ": " << message << "\n";
}

// Sink for the --output flag; standard output when no path is given.
class output_sink {
public:
    explicit output_sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::domain_error("cannot open output file: " + path);
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_ = &std::cout;
};

struct series_args {
    std::uint64_t count = 0;
    std::string method = "iteration";
    std::string output;
};

struct at_args {
    std::uint64_t t = 0;
    std::string method = "closed";
    std::string output;
};

struct verify_args {
    std::uint64_t max_t = 0;
    std::uint64_t oracle_max_t = 0;
    std::uint64_t poly_max_t = 512;
    bool oracle_given = false;
    std::string output;
};

struct blocksums_args {
    unsigned max_n = 0;
    bool detrend = false;
    std::string output;
};

struct rule_args {
    std::string text;
    std::vector<std::int64_t> seeds;
    unsigned generations = 0;
    std::string output;
};

struct render_args {
    unsigned rule = 150;
    std::uint64_t rows = 0;
    std::string output;
};

struct bench_args {
    std::vector<std::uint64_t> sizes;
    int repetitions = 5;
    std::string method = "both";
    std::string output;
};

std::vector<std::uint64_t> series_by_method(const std::string& method, std::uint64_t count) {
    if (method == "iteration") return activity_series(count).values;
    if (method == "simulate") return simulate_activity(rule_number::rule150(), count);
    std::vector<std::uint64_t> values;
    values.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) values.push_back(activity_closed_form(t));
    return values;
}

int run_series(const series_args& args) {
    if (args.count == 0) throw std::domain_error("--count must be >= 1");
    if (args.count > (std::uint64_t{1} << 28))
        throw std::domain_error("--count above 2^28 is not materializable; use `at` for spot values");
    const std::vector<std::uint64_t> values = series_by_method(args.method, args.count);
    output_sink sink(args.output);
    sink.stream() << "t,x\n";
    for (std::uint64_t t = 0; t < values.size(); ++t)
        sink.stream() << t << ',' << values[t] << '\n';
    return 0;
}

int run_at(const at_args& args) {
    std::uint64_t value = 0;
    if (args.method == "closed") {
        value = activity_at(args.t);
    } else {
        if (args.t >= (std::uint64_t{1} << 28))
            throw std::domain_error("t above 2^28 requires --method closed");
        value = series_by_method(args.method, args.t + 1).back();
    }
    output_sink sink(args.output);
    sink.stream() << "t,x\n" << args.t << ',' << value << '\n';
    return 0;
}

int run_verify(const verify_args& args) {
    verify_options options;
    options.max_t = args.max_t;
    options.oracle_max_t =
        args.oracle_given ? args.oracle_max_t : std::min<std::uint64_t>(args.max_t, 8192);
    options.poly_max_t = std::min<std::uint64_t>(args.poly_max_t, args.max_t);

    const auto mismatch = cross_verify(options);
    if (mismatch) {
        error_line("verify", "mismatch at t=" + std::to_string(mismatch->t) + ": " + mismatch->what);
        return 1;
    }
    output_sink sink(args.output);
    sink.stream() << "verify: ok (max_t=" << options.max_t
                  << ", oracle_max_t=" << options.oracle_max_t
                  << ", poly_max_t=" << options.poly_max_t << ", self-similarity)\n";
    return 0;
}

int run_blocksums(const blocksums_args& args) {
    output_sink sink(args.output);
    if (args.detrend) {
        if (args.max_n > 26)
            throw std::domain_error("--detrend materializes 2^max-n values; max-n must be <= 26");
        const std::vector<std::int64_t> d = detrended_series(std::uint64_t{1} << args.max_n);
        sink.stream() << "t,d\n";
        for (std::uint64_t t = 0; t < d.size(); ++t) sink.stream() << t << ',' << d[t] << '\n';
        return 0;
    }
    sink.stream() << "n,S,F,N\n";
    for (unsigned n = 0; n <= args.max_n; ++n) {
        // Evaluate the whole row before writing so an overflow cannot leave
        // a partial line behind.
        const std::uint64_t s = block_sum(n);
        const std::uint64_t f = fibonacci(n + 2);
        const std::uint64_t d = detrend_offset(n);
        sink.stream() << n << ',' << s << ',' << f << ',' << d << '\n';
    }
    return 0;
}

int run_rule(const rule_args& args) {
    replication_rule rule = parse_rule(args.text);
    std::vector<std::vector<std::int64_t>> seeds;
    seeds.reserve(args.seeds.size());
    for (const std::int64_t s : args.seeds) seeds.push_back({s});
    set_seeds(rule, std::move(seeds));

    generation_state state = initial_state(rule);
    for (unsigned g = 0; g < args.generations; ++g) {
        std::size_t total = 0;
        for (const auto& s : state.strings) total += s.size();
        if (total > (std::size_t{1} << 26))
            throw std::domain_error("generation strings exceed 2^26 elements; lower --gens");
        state = apply_generation(rule, state);
    }

    const std::vector<std::int64_t> values = concatenated(state);
    output_sink sink(args.output);
    for (std::size_t i = 0; i < values.size(); ++i)
        sink.stream() << (i ? "," : "") << values[i];
    sink.stream() << '\n';
    return 0;
}

int run_render(const render_args& args) {
    if (args.rows == 0) throw std::domain_error("--rows must be >= 1");
    if (args.rows > 4096) throw std::domain_error("--rows above 4096 is not renderable to plain PBM");

    const std::vector<lattice_window> rows =
        simulate_rows(rule_number(args.rule), args.rows);
    const std::int64_t half = static_cast<std::int64_t>(args.rows) - 1;

    output_sink sink(args.output);
    sink.stream() << "P1\n" << (2 * args.rows - 1) << ' ' << args.rows << '\n';
    for (const lattice_window& row : rows) {
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(2 * args.rows - 1); ++c) {
            if (c) sink.stream() << ' ';
            sink.stream() << (row.cell(c - half) ? '1' : '0');
        }
        sink.stream() << '\n';
    }
    return 0;
}

const char* method_name(bench_method m) {
    return m == bench_method::iteration ? "iteration" : "simulation";
}

int run_bench(const bench_args& args) {
    bench_config config;
    config.sizes = args.sizes;
    config.repetitions = args.repetitions;
    config.run_iteration = args.method != "simulate";
    config.run_simulation = args.method != "iteration";

    const bench_report report = run_scaling_bench(config);

    output_sink sink(args.output);
    sink.stream() << "method,size,median_seconds,doubling_ratio\n";
    char buf[64];
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const bench_sample& s = report.samples[i];
        std::snprintf(buf, sizeof buf, "%.9f", s.seconds);
        sink.stream() << method_name(s.method) << ',' << s.size << ',' << buf << ',';
        const bool last_of_method =
            i + 1 == report.samples.size() || report.samples[i + 1].method != s.method;
        if (last_of_method) {
            const auto ratio = s.method == bench_method::iteration ? report.iteration_ratio
                                                                   : report.simulation_ratio;
            std::snprintf(buf, sizeof buf, "%.4f", *ratio);
            sink.stream() << buf;
        }
        sink.stream() << '\n';
    }

    if (config.run_iteration && !report.iteration_in_band()) {
        std::snprintf(buf, sizeof buf, "%.4f", *report.iteration_ratio);
        error_line("bench", std::string("iteration doubling ratio ") + buf + " outside [" +
                                std::to_string(kIterationRatioMin) + ", " +
                                std::to_string(kIterationRatioMax) + "]");
        return 1;
    }
    if (config.run_simulation && !report.simulation_in_band()) {
        std::snprintf(buf, sizeof buf, "%.4f", *report.simulation_ratio);
        error_line("bench", std::string("simulation doubling ratio ") + buf + " outside [" +
                                std::to_string(kSimulationRatioMin) + ", " +
                                std::to_string(kSimulationRatioMax) + "]");
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total-activity toolkit for single-seeded elementary cellular automata"};
    app.require_subcommand(1);

    series_args series;
    auto* series_cmd = app.add_subcommand("series", "Write X(0..count-1) as CSV");
    series_cmd->add_option("--count", series.count, "Number of values")->required();
    series_cmd->add_option("--method", series.method, "iteration|closed|simulate")
        ->check(CLI::IsMember({"iteration", "closed", "simulate"}));
    series_cmd->add_option("--output", series.output, "Output path (default stdout)");

    at_args at;
    auto* at_cmd = app.add_subcommand("at", "Write the single value X(t) as CSV");
    at_cmd->add_option("t", at.t, "Time index")->required();
    at_cmd->add_option("--method", at.method, "closed|iteration|simulate")
        ->check(CLI::IsMember({"closed", "iteration", "simulate"}));
    at_cmd->add_option("--output", at.output, "Output path (default stdout)");

    verify_args verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-check iteration, closed form, simulation and "
                                     "polynomial rows; exit 1 on the first mismatch");
    verify_cmd->add_option("--max-t", verify.max_t, "Iteration vs closed form for t < max-t")
        ->required();
    verify_cmd->add_option("--oracle-max-t", verify.oracle_max_t,
                           "Lattice simulation for t < oracle-max-t (default min(max-t, 8192))");
    verify_cmd->add_option("--poly-max-t", verify.poly_max_t,
                           "Polynomial rows for t < poly-max-t (default 512, clamped to max-t)");
    verify_cmd->add_option("--output", verify.output, "Output path (default stdout)");

    blocksums_args blocksums;
    auto* blocksums_cmd =
        app.add_subcommand("blocksums", "Write n,S_n,F_{n+2},N_n rows up to max-n as CSV");
    blocksums_cmd->add_option("--max-n", blocksums.max_n, "Largest dyadic exponent")->required();
    blocksums_cmd->add_flag("--detrend", blocksums.detrend,
                            "Write the detrended series over t < 2^max-n instead");
    blocksums_cmd->add_option("--output", blocksums.output, "Output path (default stdout)");

    rule_args rule;
    auto* rule_cmd = app.add_subcommand(
        "rule", "Evaluate a replication rule, e.g. \"a,b -> a,b,3a,2a+b\" with --seeds 1,3");
    rule_cmd->add_option("text", rule.text, "Rule expression")->required();
    rule_cmd->add_option("--seeds", rule.seeds, "One integer seed per carried string")
        ->required()
        ->delimiter(',');
    rule_cmd->add_option("--gens", rule.generations, "Generations to apply");
    rule_cmd->add_option("--output", rule.output, "Output path (default stdout)");

    render_args render;
    auto* render_cmd =
        app.add_subcommand("render", "Render the space-time grid as a plain PBM image");
    render_cmd->add_option("--rule", render.rule, "ECA rule number")->check(CLI::Range(0, 255));
    render_cmd->add_option("--rows", render.rows, "Rows to evolve")->required();
    render_cmd->add_option("--output", render.output, "Output path (default stdout)");

    bench_args bench;
    auto* bench_cmd = app.add_subcommand(
        "bench", "Measure iteration vs simulation wall time and check the scaling bands");
    bench_cmd->add_option("--sizes", bench.sizes, "Power-of-two sizes, ascending (>= 2 of them)")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench.repetitions, "Timing repetitions per size")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--method", bench.method, "iteration|simulate|both")
        ->check(CLI::IsMember({"iteration", "simulate", "both"}));
    bench_cmd->add_option("--output", bench.output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_line("usage", e.what());
        return 2;
    }
    verify.oracle_given = verify_cmd->count("--oracle-max-t") > 0;

    try {
        if (series_cmd->parsed()) return run_series(series);
        if (at_cmd->parsed()) return run_at(at);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (blocksums_cmd->parsed()) return run_blocksums(blocksums);
        if (rule_cmd->parsed()) return run_rule(rule);
        if (render_cmd->parsed()) return run_render(render);
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const rule_parse_error& e) {
        error_line("parse", e.what());
        return 2;
    } catch (const std::overflow_error& e) {
        error_line("overflow", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        error_line("domain", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_line("error", e.what());
        return 2;
    }
    return 2;
}
