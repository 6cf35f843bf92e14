#include "lfa/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "lfa/rng.hpp"

namespace lfa {

namespace {

struct Individual {
    std::vector<double> genes;
    double value = 0.0;
};

TraceFrame snapshot(const std::vector<Individual>& pop, int generation, double best) {
    TraceFrame frame;
    frame.generation = generation;
    for (const Individual& ind : pop) {
        frame.positions.push_back(ind.genes);
        frame.intensities.push_back(-ind.value);
    }
    frame.best_value = best;
    return frame;
}

} // namespace

void GaParams::validate() const {
    if (population < 2) throw std::invalid_argument("GaParams: population must be >= 2");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
        throw std::invalid_argument("GaParams: mutation_prob must be in [0, 1]");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw std::invalid_argument("GaParams: crossover_prob must be in [0, 1]");
    if (tournament < 1) throw std::invalid_argument("GaParams: tournament must be >= 1");
    if (!(mutation_sigma_scale > 0.0))
        throw std::invalid_argument("GaParams: mutation_sigma_scale must be > 0");
    if (max_generations < 0) throw std::invalid_argument("GaParams: max_generations must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("GaParams: epsilon must be > 0");
    if (stagnation_window < 1)
        throw std::invalid_argument("GaParams: stagnation_window must be >= 1");
    if (!(success_threshold > 0.0))
        throw std::invalid_argument("GaParams: success_threshold must be > 0");
}

RunResult ga_run(const BenchmarkSpec& spec, const GaParams& params,
                 std::uint64_t seed, bool capture_trace) {
    spec.validate();
    params.validate();
    const std::size_t d = static_cast<std::size_t>(spec.dimension);
    const std::size_t n = static_cast<std::size_t>(params.population);

    std::vector<double> sigma(d);
    for (std::size_t k = 0; k < d; ++k)
        sigma[k] = params.mutation_sigma_scale * (spec.upper[k] - spec.lower[k]);

    Rng rng(seed);
    EvalCounter counter;
    BestTracker best;

    std::vector<Individual> pop(n);
    for (Individual& ind : pop) {
        ind.genes = uniform_in_bounds(spec.lower, spec.upper, rng);
        ind.value = evaluate(spec, ind.genes, counter);
        best.offer(ind.genes, ind.value);
    }

    auto tournament_pick = [&]() -> const Individual& {
        std::size_t winner = rng.bounded(n);
        for (int t = 1; t < params.tournament; ++t) {
            const std::size_t c = rng.bounded(n);
            if (pop[c].value < pop[winner].value) winner = c;
        }
        return pop[winner];
    };

    auto mutate = [&](std::vector<double>& genes) {
        for (std::size_t k = 0; k < d; ++k)
            if (rng.uniform01() < params.mutation_prob) {
                genes[k] += sigma[k] * rng.gaussian();
                genes[k] = std::clamp(genes[k], spec.lower[k], spec.upper[k]);
            }
    };

    std::vector<TraceFrame> trace;
    int generation = 0;
    if (capture_trace) trace.push_back(snapshot(pop, generation, best.value));

    std::vector<double> history;
    std::vector<Individual> next;
    next.reserve(n);
    while (generation < params.max_generations) {
        next.clear();
        while (next.size() < n) {
            std::vector<double> a = tournament_pick().genes;
            std::vector<double> b = tournament_pick().genes;
            if (rng.uniform01() < params.crossover_prob)
                for (std::size_t k = 0; k < d; ++k)
                    if (rng.uniform01() < 0.5) std::swap(a[k], b[k]);
            mutate(a);
            mutate(b);
            next.push_back({std::move(a), 0.0});
            if (next.size() < n) next.push_back({std::move(b), 0.0});
        }
        // Full generational replacement; the previous population is gone.
        pop = std::move(next);
        next.clear();
        for (Individual& ind : pop) {
            ind.value = evaluate(spec, ind.genes, counter);
            best.offer(ind.genes, ind.value);
        }
        ++generation;
        if (capture_trace) trace.push_back(snapshot(pop, generation, best.value));
        history.push_back(best.value);
        if (stagnated(history, params.epsilon, params.stagnation_window)) break;
    }

    RunResult result;
    result.best_position = best.position;
    result.best_value = best.value;
    result.evaluations = counter.count;
    result.success = std::fabs(best.value - spec.optimum_value) <= params.success_threshold;
    result.generations = generation;
    if (capture_trace) result.trace = std::move(trace);
    return result;
}

} // namespace lfa
