#include "lfa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lfa {

namespace {

using nlohmann::json;

// Shortest representation that parses back to the same double.
std::string fmt_double(double v) {
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

std::string cell_text(const TrialStats& s) {
    if (!s.mean_evaluations) return "— (0%)";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld ± %lld (%d%%)",
                  static_cast<long long>(std::llround(*s.mean_evaluations)),
                  static_cast<long long>(std::llround(*s.std_evaluations)),
                  static_cast<int>(std::llround(s.success_rate * 100.0)));
    return buf;
}

json record_json(const TrialRecord& r, bool include_timing) {
    json j;
    j["seed"] = r.seed;
    j["evaluations"] = r.evaluations;
    j["best_value"] = r.best_value;
    j["success"] = r.success;
    j["generations"] = r.generations;
    if (include_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

TrialRecord record_from_json(const json& j) {
    TrialRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.best_value = j.at("best_value").get<double>();
    r.success = j.at("success").get<bool>();
    r.generations = j.at("generations").get<int>();
    if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

std::string_view algo_name(const AlgoParams& params) {
    switch (params.index()) {
        case 0: return "lfa";
        case 1: return "pso";
        default: return "ga";
    }
}

AlgoParams default_params(std::string_view algorithm) {
    if (algorithm == "lfa") return FireflyParams{};
    if (algorithm == "pso") return PsoParams{};
    if (algorithm == "ga") return GaParams{};
    throw std::invalid_argument("unknown algorithm: " + std::string(algorithm));
}

RunResult run_algorithm(const AlgoParams& params, const BenchmarkSpec& spec,
                        std::uint64_t seed, bool capture_trace) {
    return std::visit(
        [&](const auto& p) -> RunResult {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FireflyParams>)
                return firefly_run(spec, p, seed, capture_trace);
            else if constexpr (std::is_same_v<T, PsoParams>)
                return pso_run(spec, p, seed, capture_trace);
            else
                return ga_run(spec, p, seed, capture_trace);
        },
        params);
}

TrialStats aggregate_trials(std::string_view algorithm, std::string_view benchmark,
                            int dimension, std::vector<TrialRecord> records) {
    if (records.empty()) throw std::invalid_argument("aggregate_trials: no records");
    std::sort(records.begin(), records.end(),
              [](const TrialRecord& a, const TrialRecord& b) { return a.seed < b.seed; });

    TrialStats stats;
    stats.algorithm = algorithm;
    stats.benchmark = benchmark;
    stats.dimension = dimension;
    stats.n_trials = static_cast<int>(records.size());

    std::uint64_t n_success = 0;
    double sum = 0.0;
    for (const TrialRecord& r : records)
        if (r.success) {
            ++n_success;
            sum += static_cast<double>(r.evaluations);
        }
    stats.success_rate = static_cast<double>(n_success) / static_cast<double>(records.size());
    if (n_success > 0) {
        const double mean = sum / static_cast<double>(n_success);
        stats.mean_evaluations = mean;
        if (n_success == 1) {
            stats.std_evaluations = 0.0;
        } else {
            double ss = 0.0;
            for (const TrialRecord& r : records)
                if (r.success) {
                    const double dev = static_cast<double>(r.evaluations) - mean;
                    ss += dev * dev;
                }
            stats.std_evaluations = std::sqrt(ss / static_cast<double>(n_success - 1));
        }
    }
    stats.per_trial = std::move(records);
    return stats;
}

namespace {

TrialRecord run_one_trial(const AlgoParams& params, const BenchmarkSpec& spec,
                          std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run_algorithm(params, spec, seed);
    const auto t1 = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.seed = seed;
    rec.evaluations = r.evaluations;
    rec.best_value = r.best_value;
    rec.success = r.success;
    rec.generations = r.generations;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

} // namespace

TrialStats run_trials_serial(const AlgoParams& params, const BenchmarkSpec& spec,
                             int n_trials, std::uint64_t base_seed) {
    if (n_trials < 1) throw std::invalid_argument("run_trials: n_trials must be >= 1");
    std::vector<TrialRecord> records(n_trials);
    for (int t = 0; t < n_trials; ++t)
        records[t] = run_one_trial(params, spec, base_seed + static_cast<std::uint64_t>(t));
    return aggregate_trials(algo_name(params), spec.name, spec.dimension, std::move(records));
}

TrialStats run_trials(const AlgoParams& params, const BenchmarkSpec& spec, int n_trials,
                      std::uint64_t base_seed, int threads) {
    if (n_trials < 1) throw std::invalid_argument("run_trials: n_trials must be >= 1");
#ifdef _OPENMP
    if (threads > 1) {
        // Trials are independent (one Rng and one counter each); any schedule
        // yields the same records, and aggregation sorts by seed.
        std::vector<TrialRecord> records(n_trials);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int t = 0; t < n_trials; ++t)
            records[t] = run_one_trial(params, spec, base_seed + static_cast<std::uint64_t>(t));
        return aggregate_trials(algo_name(params), spec.name, spec.dimension,
                                std::move(records));
    }
#else
    (void)threads;
#endif
    return run_trials_serial(params, spec, n_trials, base_seed);
}

std::string format_report(std::span<const TrialStats> stats, ReportFormat format,
                          bool include_timing) {
    if (stats.empty()) throw std::invalid_argument("format_report: empty stats");

    if (format == ReportFormat::csv) {
        std::string out = "algorithm,benchmark,dimension,n_trials,mean_evaluations,"
                          "std_evaluations,success_rate";
        if (include_timing) out += ",mean_wall_ms";
        out += "\n";
        for (const TrialStats& s : stats) {
            out += s.algorithm + "," + s.benchmark + "," + std::to_string(s.dimension) + "," +
                   std::to_string(s.n_trials) + ",";
            out += s.mean_evaluations ? fmt_double(*s.mean_evaluations) : "";
            out += ",";
            out += s.std_evaluations ? fmt_double(*s.std_evaluations) : "";
            out += "," + fmt_double(s.success_rate);
            if (include_timing) {
                double ms = 0.0;
                for (const TrialRecord& r : s.per_trial) ms += r.wall_ms;
                out += "," + fmt_double(ms / static_cast<double>(s.per_trial.size()));
            }
            out += "\n";
        }
        return out;
    }

    if (format == ReportFormat::json) {
        json arr = json::array();
        for (const TrialStats& s : stats) {
            json j;
            j["algorithm"] = s.algorithm;
            j["benchmark"] = s.benchmark;
            j["dimension"] = s.dimension;
            j["n_trials"] = s.n_trials;
            j["mean_evals"] = s.mean_evaluations ? json(*s.mean_evaluations) : json(nullptr);
            j["std_evals"] = s.std_evaluations ? json(*s.std_evaluations) : json(nullptr);
            j["success_rate"] = s.success_rate;
            json per = json::array();
            for (const TrialRecord& r : s.per_trial) per.push_back(record_json(r, include_timing));
            j["per_trial"] = std::move(per);
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }

    // Text table: rows = benchmarks, columns = algorithms, first-appearance order.
    std::vector<std::string> benches, algos;
    for (const TrialStats& s : stats) {
        const std::string row = s.benchmark + " (d=" + std::to_string(s.dimension) + ")";
        if (std::find(benches.begin(), benches.end(), row) == benches.end())
            benches.push_back(row);
        if (std::find(algos.begin(), algos.end(), s.algorithm) == algos.end())
            algos.push_back(s.algorithm);
    }
    std::map<std::pair<std::string, std::string>, std::string> cells;
    for (const TrialStats& s : stats) {
        const std::string row = s.benchmark + " (d=" + std::to_string(s.dimension) + ")";
        cells[{row, s.algorithm}] = cell_text(s);
    }

    // column width in code points, not bytes (cells contain "±" and "—")
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
            if ((ch & 0xc0) != 0x80) ++w;
        return w;
    };
    std::size_t w0 = std::string("function").size();
    for (const auto& b : benches) w0 = std::max(w0, display_width(b));
    std::vector<std::size_t> widths(algos.size());
    for (std::size_t c = 0; c < algos.size(); ++c) {
        widths[c] = display_width(algos[c]);
        for (const auto& b : benches) {
            auto it = cells.find({b, algos[c]});
            if (it != cells.end()) widths[c] = std::max(widths[c], display_width(it->second));
        }
    }

    auto pad = [&display_width](const std::string& s, std::size_t w) {
        return s + std::string(w - std::min(w, display_width(s)), ' ');
    };
    std::string out = pad("function", w0);
    for (std::size_t c = 0; c < algos.size(); ++c) out += "  " + pad(algos[c], widths[c]);
    out += "\n";
    for (const auto& b : benches) {
        out += pad(b, w0);
        for (std::size_t c = 0; c < algos.size(); ++c) {
            auto it = cells.find({b, algos[c]});
            out += "  " + pad(it == cells.end() ? std::string("-") : it->second, widths[c]);
        }
        out += "\n";
    }
    return out;
}

std::vector<TrialStats> parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_report_csv: empty input");
    const std::vector<std::string> header = split_csv_line(line);
    std::vector<TrialStats> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() < 7) throw std::invalid_argument("parse_report_csv: short row");
        TrialStats s;
        s.algorithm = f[0];
        s.benchmark = f[1];
        s.dimension = std::stoi(f[2]);
        s.n_trials = std::stoi(f[3]);
        if (!f[4].empty()) s.mean_evaluations = std::stod(f[4]);
        if (!f[5].empty()) s.std_evaluations = std::stod(f[5]);
        s.success_rate = std::stod(f[6]);
        out.push_back(std::move(s));
    }
    (void)header;
    return out;
}

std::vector<TrialStats> parse_report_json(const std::string& text) {
    const json arr = json::parse(text);
    std::vector<TrialStats> out;
    for (const json& j : arr) {
        TrialStats s;
        s.algorithm = j.at("algorithm").get<std::string>();
        s.benchmark = j.at("benchmark").get<std::string>();
        s.dimension = j.at("dimension").get<int>();
        s.n_trials = j.at("n_trials").get<int>();
        if (!j.at("mean_evals").is_null()) s.mean_evaluations = j.at("mean_evals").get<double>();
        if (!j.at("std_evals").is_null()) s.std_evaluations = j.at("std_evals").get<double>();
        s.success_rate = j.at("success_rate").get<double>();
        for (const json& r : j.at("per_trial")) s.per_trial.push_back(record_from_json(r));
        out.push_back(std::move(s));
    }
    return out;
}

std::string run_result_json(const RunResult& result, bool include_trace) {
    json j;
    j["best_position"] = result.best_position;
    j["best_value"] = result.best_value;
    j["evaluations"] = result.evaluations;
    j["success"] = result.success;
    j["generations"] = result.generations;
    if (include_trace && result.trace) {
        json frames = json::array();
        for (const TraceFrame& f : *result.trace) {
            json fj;
            fj["generation"] = f.generation;
            fj["positions"] = f.positions;
            fj["intensities"] = f.intensities;
            fj["best_value"] = f.best_value;
            frames.push_back(std::move(fj));
        }
        j["trace"] = std::move(frames);
    }
    return j.dump(2) + "\n";
}

void export_trace(const RunResult& result, std::ostream& out) {
    if (!result.trace) throw std::logic_error("export_trace: result carries no trace");
    const auto& frames = *result.trace;
    if (frames.empty()) throw std::logic_error("export_trace: trace is empty");
    const std::size_t d = frames.front().positions.at(0).size();

    out << "generation,index";
    for (std::size_t k = 1; k <= d; ++k) out << ",x" << k;
    out << ",intensity\n";
    for (const TraceFrame& f : frames) {
        for (std::size_t i = 0; i < f.positions.size(); ++i) {
            out << f.generation << ',' << i;
            for (double v : f.positions[i]) out << ',' << fmt_double(v);
            out << ',' << fmt_double(f.intensities[i]) << '\n';
        }
    }
    if (!out) throw std::runtime_error("export_trace: write failed");
}

void export_trace(const RunResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_trace: cannot open " + path);
    export_trace(result, out);
    out.flush();
    if (!out) throw std::runtime_error("export_trace: write failed for " + path);
}

} // namespace lfa
