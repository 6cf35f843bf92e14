#ifndef LFA_GA_HPP
#define LFA_GA_HPP

#include <cstdint>
#include <vector>

#include "lfa/benchmarks.hpp"
#include "lfa/run_result.hpp"

namespace lfa {

/// Real-coded generational GA: tournament selection, uniform crossover,
/// per-gene Gaussian mutation, full replacement with no elitism. The mutation
/// step is mutation_sigma_scale * (upper - lower) per gene. The stagnation
/// window default is larger than the swarm optimizers' because a GA
/// generation costs only `population` evaluations and record improvements
/// arrive in sparse events; 200 generations of 40 matches the ~8000
/// evaluations the firefly window spans.
struct GaParams {
    int population = 40;
    double mutation_prob = 0.05;
    double crossover_prob = 0.95;
    int tournament = 2;
    double mutation_sigma_scale = 0.001;
    int max_generations = 10000;
    double epsilon = 1e-5;
    int stagnation_window = 200;
    double success_threshold = 1e-3;

    void validate() const;
};

RunResult ga_run(const BenchmarkSpec& spec, const GaParams& params,
                 std::uint64_t seed, bool capture_trace = false);

} // namespace lfa

#endif
