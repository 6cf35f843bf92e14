// Compares the serial trial runner against the OpenMP one on a midsize
// workload and prints throughput for both. The parallel path must produce
// identical statistics; this binary checks that too.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lfa/harness.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_stats(const lfa::TrialStats& a, const lfa::TrialStats& b) {
    if (a.success_rate != b.success_rate) return false;
    if (a.mean_evaluations.has_value() != b.mean_evaluations.has_value()) return false;
    if (a.mean_evaluations && *a.mean_evaluations != *b.mean_evaluations) return false;
    if (a.per_trial.size() != b.per_trial.size()) return false;
    for (std::size_t i = 0; i < a.per_trial.size(); ++i) {
        if (a.per_trial[i].seed != b.per_trial[i].seed ||
            a.per_trial[i].evaluations != b.per_trial[i].evaluations ||
            a.per_trial[i].best_value != b.per_trial[i].best_value)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int trials = 48;
    int threads = 0; // 0 = hardware default
    if (argc > 1) trials = std::stoi(argv[1]);
    if (argc > 2) threads = std::stoi(argv[2]);
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 1;
    std::puts("built without OpenMP; parallel path falls back to serial");
#endif

    const lfa::BenchmarkSpec spec = lfa::lookup("rastrigin", 16);
    lfa::FireflyParams params;
    params.gamma = lfa::gamma_for_scale(10.0);
    params.scales.assign(16, 0.01);
    params.max_generations = 60;

    std::printf("workload: %s d=%d, %d trials, firefly n=%d\n", spec.name.c_str(),
                spec.dimension, trials, params.population);

    auto t0 = std::chrono::steady_clock::now();
    const lfa::TrialStats serial = lfa::run_trials_serial(params, spec, trials, 1);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const lfa::TrialStats parallel = lfa::run_trials(params, spec, trials, 1, threads);
    const double t_parallel = seconds_since(t0);

    std::printf("serial   : %8.3f s  (%6.1f trials/s)\n", t_serial, trials / t_serial);
    std::printf("openmp x%-2d: %7.3f s  (%6.1f trials/s), speedup %.2fx\n", threads,
                t_parallel, trials / t_parallel, t_serial / t_parallel);

    if (!same_stats(serial, parallel)) {
        std::puts("MISMATCH: parallel results differ from serial reference");
        return 1;
    }
    std::puts("parallel results identical to serial reference");
    return 0;
}
