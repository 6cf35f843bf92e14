#ifndef LFA_HARNESS_HPP
#define LFA_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lfa/benchmarks.hpp"
#include "lfa/firefly.hpp"
#include "lfa/ga.hpp"
#include "lfa/pso.hpp"
#include "lfa/run_result.hpp"

namespace lfa {

/// Algorithm selection: the parameter struct identifies the algorithm.
using AlgoParams = std::variant<FireflyParams, PsoParams, GaParams>;

/// "lfa", "pso" or "ga".
std::string_view algo_name(const AlgoParams& params);

/// Default-constructed parameters for the named algorithm. Throws
/// std::invalid_argument for unknown names.
AlgoParams default_params(std::string_view algorithm);

/// Runs the selected algorithm once. Deterministic given the seed.
RunResult run_algorithm(const AlgoParams& params, const BenchmarkSpec& spec,
                        std::uint64_t seed, bool capture_trace = false);

struct TrialRecord {
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    double best_value = 0.0;
    bool success = false;
    int generations = 0;
    double wall_ms = 0.0; // informational; excluded from reports by default
};

/// Table-1-style aggregate. Mean and standard deviation (sample, n-1) of the
/// evaluation counts are taken over successful trials only and are absent when
/// every trial failed; a single success reports std 0.
struct TrialStats {
    std::string algorithm;
    std::string benchmark;
    int dimension = 0;
    int n_trials = 0;
    std::optional<double> mean_evaluations;
    std::optional<double> std_evaluations;
    double success_rate = 0.0;
    std::vector<TrialRecord> per_trial; // sorted by seed
};

/// Order-independent reduction of per-trial records (records are sorted by
/// seed before aggregation).
TrialStats aggregate_trials(std::string_view algorithm, std::string_view benchmark,
                            int dimension, std::vector<TrialRecord> records);

/// Runs n_trials independent seeded runs (seeds base_seed .. base_seed +
/// n_trials - 1). `threads` > 1 runs trials concurrently via OpenMP; results
/// are identical to run_trials_serial regardless of thread count.
TrialStats run_trials(const AlgoParams& params, const BenchmarkSpec& spec, int n_trials,
                      std::uint64_t base_seed, int threads = 1);

/// Reference implementation of run_trials: one trial after another on the
/// calling thread. Kept for testing and benchmarking the parallel path.
TrialStats run_trials_serial(const AlgoParams& params, const BenchmarkSpec& spec,
                             int n_trials, std::uint64_t base_seed);

enum class ReportFormat { table, csv, json };

/// Renders stats as a Table-1-style text table (rows = benchmarks, columns =
/// algorithms, cells "mean +- std (rate%)"), as CSV, or as JSON. CSV and JSON
/// are full precision and parse back to the same values; include_timing adds
/// wall-clock columns (off by default so outputs are byte-stable).
std::string format_report(std::span<const TrialStats> stats, ReportFormat format,
                          bool include_timing = false);

/// Parses format_report(..., csv/json) output back into stats (used by
/// round-trip tests; the table format is lossy and not parseable).
std::vector<TrialStats> parse_report_csv(const std::string& text);
std::vector<TrialStats> parse_report_json(const std::string& text);

/// RunResult as JSON (stable key order, full precision).
std::string run_result_json(const RunResult& result, bool include_trace = false);

/// Writes the captured trace as CSV with header
/// generation,index,x1,...,xd,intensity and one row per agent per snapshot.
/// Throws std::logic_error if the result has no trace and std::runtime_error
/// on I/O failure.
void export_trace(const RunResult& result, std::ostream& out);
void export_trace(const RunResult& result, const std::string& path);

} // namespace lfa

#endif
