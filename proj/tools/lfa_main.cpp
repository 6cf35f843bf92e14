// Command-line front end: single runs, benchmark sweeps, trace export.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfa/benchmarks.hpp"
#include "lfa/harness.hpp"

namespace {

struct CommonOpts {
    std::string algo = "lfa";
    std::string fn;
    int dim = 0; // 0 = registry default
    std::uint64_t seed = 12345;
    int population = 40;
    std::optional<double> lower_override, upper_override;

    // firefly
    double alpha = 0.2, gamma = 1.0, lambda = 1.5, beta0 = 1.0, m = 2.0;
    std::optional<double> scale; // scalar S applied to all dimensions
    double t_min = 1.0;

    // pso
    double c1 = 2.0, c2 = 2.0, vcap_scale = 0.002;
    bool zero_velocity = false;

    // ga
    double mutation = 0.05, crossover = 0.95, sigma_scale = 0.001;
    int tournament = 2;

    // stopping / success
    int max_generations = 10000;
    double epsilon = 1e-5;
    std::optional<int> window;
    double success_threshold = 1e-3;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool single_run) {
    if (single_run) {
        cmd->add_option("--algo", o.algo, "Algorithm: lfa, pso or ga")
            ->check(CLI::IsMember({"lfa", "pso", "ga"}))
            ->capture_default_str();
        cmd->add_option("--fn", o.fn, "Benchmark function name")->required();
    }
    cmd->add_option("--dim", o.dim, "Problem dimension (default: registry value)");
    cmd->add_option("--seed", o.seed, "Base random seed (default: $LFA_SEED or 12345)");
    cmd->add_option("--population", o.population, "Agents per run")->capture_default_str();
    cmd->add_option("--lower", o.lower_override, "Override every lower bound");
    cmd->add_option("--upper", o.upper_override, "Override every upper bound");

    cmd->add_option("--alpha", o.alpha, "Firefly randomization weight")->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "Firefly absorption coefficient")->capture_default_str();
    cmd->add_option("--lambda", o.lambda, "Levy exponent")->capture_default_str();
    cmd->add_option("--beta0", o.beta0, "Attractiveness at distance 0")->capture_default_str();
    cmd->add_option("--m", o.m, "Attractiveness attenuation exponent")->capture_default_str();
    cmd->add_option("--scale", o.scale, "Per-dimension step scale S (default: width/10)");
    cmd->add_option("--t-min", o.t_min, "Minimum Levy step length")->capture_default_str();

    cmd->add_option("--c1", o.c1, "PSO cognitive weight")->capture_default_str();
    cmd->add_option("--c2", o.c2, "PSO social weight")->capture_default_str();
    cmd->add_option("--vcap-scale", o.vcap_scale, "PSO velocity cap as a fraction of width")
        ->capture_default_str();
    cmd->add_flag("--zero-velocity", o.zero_velocity, "Start PSO particles with zero velocity");

    cmd->add_option("--mutation", o.mutation, "GA per-gene mutation probability")
        ->capture_default_str();
    cmd->add_option("--crossover", o.crossover, "GA crossover probability")
        ->capture_default_str();
    cmd->add_option("--sigma-scale", o.sigma_scale, "GA mutation sigma as a fraction of width")
        ->capture_default_str();
    cmd->add_option("--tournament", o.tournament, "GA tournament size")->capture_default_str();

    cmd->add_option("--max-generations", o.max_generations, "Generation cap")
        ->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "Stagnation tolerance")->capture_default_str();
    cmd->add_option("--window", o.window,
                    "Stagnation window in generations (default: 10; 200 for ga)");
    cmd->add_option("--success-threshold", o.success_threshold,
                    "Success if |best - optimum| <= threshold")
        ->capture_default_str();
}

lfa::BenchmarkSpec make_spec(const CommonOpts& o, const std::string& fn_name) {
    lfa::BenchmarkSpec spec =
        o.dim > 0 ? lfa::lookup(fn_name, o.dim) : lfa::lookup(fn_name);
    if (o.lower_override) spec.lower.assign(spec.dimension, *o.lower_override);
    if (o.upper_override) spec.upper.assign(spec.dimension, *o.upper_override);
    spec.validate();
    return spec;
}

lfa::AlgoParams make_params(const CommonOpts& o, const std::string& algo,
                            const lfa::BenchmarkSpec& spec) {
    if (algo == "lfa") {
        lfa::FireflyParams p;
        p.alpha = o.alpha;
        p.gamma = o.gamma;
        p.beta0 = o.beta0;
        p.m = o.m;
        p.levy.lambda = o.lambda;
        p.levy.t_min = o.t_min;
        if (o.scale) p.scales.assign(spec.dimension, *o.scale);
        p.population = o.population;
        p.max_generations = o.max_generations;
        p.epsilon = o.epsilon;
        if (o.window) p.stagnation_window = *o.window;
        p.success_threshold = o.success_threshold;
        p.validate();
        return p;
    }
    if (algo == "pso") {
        lfa::PsoParams p;
        p.population = o.population;
        p.c1 = o.c1;
        p.c2 = o.c2;
        p.velocity_cap_scale = o.vcap_scale;
        p.initial_velocity = o.zero_velocity ? lfa::PsoParams::VelocityInit::zero
                                             : lfa::PsoParams::VelocityInit::uniform;
        p.max_generations = o.max_generations;
        p.epsilon = o.epsilon;
        if (o.window) p.stagnation_window = *o.window;
        p.success_threshold = o.success_threshold;
        p.validate();
        return p;
    }
    if (algo != "ga") throw std::invalid_argument("unknown algorithm: " + algo);
    lfa::GaParams p;
    p.population = o.population;
    p.mutation_prob = o.mutation;
    p.crossover_prob = o.crossover;
    p.tournament = o.tournament;
    p.mutation_sigma_scale = o.sigma_scale;
    p.max_generations = o.max_generations;
    p.epsilon = o.epsilon;
    if (o.window) p.stagnation_window = *o.window;
    p.success_threshold = o.success_threshold;
    p.validate();
    return p;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levy-flight firefly optimizer with PSO and GA baselines"};
    app.require_subcommand(1);

    CommonOpts run_opts, bench_opts, trace_opts;
    if (const char* env = std::getenv("LFA_SEED")) {
        run_opts.seed = bench_opts.seed = trace_opts.seed =
            std::strtoull(env, nullptr, 10);
    }

    std::string run_out;
    CLI::App* run_cmd = app.add_subcommand("run", "One seeded run; prints the result as JSON");
    add_common_flags(run_cmd, run_opts, true);
    run_cmd->add_option("--out", run_out, "Write JSON here instead of stdout");

    std::string bench_fns, bench_algos = "lfa,pso,ga", bench_out, bench_format = "table";
    int bench_trials = 25, bench_threads = 1;
    bool bench_timing = false;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Repeated-trial comparison across functions and algorithms");
    add_common_flags(bench_cmd, bench_opts, false);
    bench_cmd->add_option("--fns", bench_fns, "Comma-separated benchmark names")->required();
    bench_cmd->add_option("--algos", bench_algos, "Comma-separated algorithms")
        ->capture_default_str();
    bench_cmd->add_option("--trials", bench_trials, "Trials per cell")->capture_default_str();
    bench_cmd->add_option("--threads", bench_threads, "Concurrent trials")
        ->capture_default_str();
    bench_cmd->add_option("--format", bench_format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    bench_cmd->add_flag("--timing", bench_timing, "Include wall-clock columns");
    bench_cmd->add_option("--out", bench_out, "Write the report here instead of stdout");

    std::string trace_out = "trace.csv";
    CLI::App* trace_cmd =
        app.add_subcommand("trace", "One seeded run with per-generation CSV trace");
    add_common_flags(trace_cmd, trace_opts, true);
    trace_cmd->add_option("--out", trace_out, "Trace CSV path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // CLI11 prints the message; nonzero on error
    }

    try {
        if (run_cmd->parsed()) {
            const lfa::BenchmarkSpec spec = make_spec(run_opts, run_opts.fn);
            const lfa::AlgoParams params = make_params(run_opts, run_opts.algo, spec);
            const lfa::RunResult result = lfa::run_algorithm(params, spec, run_opts.seed);
            write_output(lfa::run_result_json(result), run_out);
        } else if (bench_cmd->parsed()) {
            const std::vector<std::string> fns = split_list(bench_fns);
            const std::vector<std::string> algos = split_list(bench_algos);
            if (fns.empty() || algos.empty())
                throw std::invalid_argument("bench: --fns and --algos must be non-empty");
            // validate the whole matrix before the first trial runs
            std::vector<std::pair<lfa::BenchmarkSpec, lfa::AlgoParams>> cells;
            for (const std::string& fn : fns) {
                const lfa::BenchmarkSpec spec = make_spec(bench_opts, fn);
                for (const std::string& algo : algos)
                    cells.emplace_back(spec, make_params(bench_opts, algo, spec));
            }
            std::vector<lfa::TrialStats> stats;
            for (const auto& [spec, params] : cells)
                stats.push_back(
                    lfa::run_trials(params, spec, bench_trials, bench_opts.seed, bench_threads));
            const lfa::ReportFormat fmt = bench_format == "csv"    ? lfa::ReportFormat::csv
                                          : bench_format == "json" ? lfa::ReportFormat::json
                                                                   : lfa::ReportFormat::table;
            write_output(lfa::format_report(stats, fmt, bench_timing), bench_out);
        } else if (trace_cmd->parsed()) {
            const lfa::BenchmarkSpec spec = make_spec(trace_opts, trace_opts.fn);
            const lfa::AlgoParams params = make_params(trace_opts, trace_opts.algo, spec);
            const lfa::RunResult result =
                lfa::run_algorithm(params, spec, trace_opts.seed, /*capture_trace=*/true);
            lfa::export_trace(result, trace_out);
            write_output(lfa::run_result_json(result), "");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
