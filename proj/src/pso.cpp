#include "lfa/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lfa/rng.hpp"

namespace lfa {

namespace {

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest;
    double pbest_value = 0.0;
    double value = 0.0; // objective at the current position
};

TraceFrame snapshot(const std::vector<Particle>& swarm, int generation, double best) {
    TraceFrame frame;
    frame.generation = generation;
    for (const Particle& p : swarm) {
        frame.positions.push_back(p.position);
        frame.intensities.push_back(-p.value);
    }
    frame.best_value = best;
    return frame;
}

} // namespace

void PsoParams::validate() const {
    if (population < 2) throw std::invalid_argument("PsoParams: population must be >= 2");
    if (!(c1 >= 0.0) || !(c2 >= 0.0))
        throw std::invalid_argument("PsoParams: c1 and c2 must be >= 0");
    for (double v : velocity_cap)
        if (!(v > 0.0)) throw std::invalid_argument("PsoParams: velocity cap must be > 0");
    if (velocity_cap.empty() && !(velocity_cap_scale > 0.0))
        throw std::invalid_argument("PsoParams: velocity_cap_scale must be > 0");
    if (max_generations < 0) throw std::invalid_argument("PsoParams: max_generations must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("PsoParams: epsilon must be > 0");
    if (stagnation_window < 1)
        throw std::invalid_argument("PsoParams: stagnation_window must be >= 1");
    if (!(success_threshold > 0.0))
        throw std::invalid_argument("PsoParams: success_threshold must be > 0");
}

RunResult pso_run(const BenchmarkSpec& spec, const PsoParams& params,
                  std::uint64_t seed, bool capture_trace) {
    spec.validate();
    params.validate();
    const std::size_t d = static_cast<std::size_t>(spec.dimension);

    std::vector<double> vcap = params.velocity_cap;
    if (vcap.empty()) {
        vcap.resize(d);
        for (std::size_t k = 0; k < d; ++k)
            vcap[k] = params.velocity_cap_scale * (spec.upper[k] - spec.lower[k]);
    } else if (vcap.size() != d) {
        throw std::invalid_argument("PsoParams: velocity_cap length != problem dimension");
    }

    Rng rng(seed);
    EvalCounter counter;
    BestTracker best;

    std::vector<Particle> swarm(params.population);
    for (Particle& p : swarm) {
        p.position = uniform_in_bounds(spec.lower, spec.upper, rng);
        p.velocity.resize(d, 0.0);
        if (params.initial_velocity == PsoParams::VelocityInit::uniform)
            for (std::size_t k = 0; k < d; ++k)
                p.velocity[k] = rng.uniform(-vcap[k], vcap[k]);
        p.pbest = p.position;
        p.value = evaluate(spec, p.position, counter);
        p.pbest_value = p.value;
        best.offer(p.position, p.value);
    }
    std::vector<double> gbest = best.position;
    double gbest_value = best.value;

    std::vector<TraceFrame> trace;
    int generation = 0;
    if (capture_trace) trace.push_back(snapshot(swarm, generation, best.value));

    std::vector<double> history;
    while (generation < params.max_generations) {
        for (Particle& p : swarm) {
            for (std::size_t k = 0; k < d; ++k) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                const double v = p.velocity[k] + params.c1 * r1 * (p.pbest[k] - p.position[k]) +
                                 params.c2 * r2 * (gbest[k] - p.position[k]);
                p.velocity[k] = std::clamp(v, -vcap[k], vcap[k]);
                p.position[k] =
                    std::clamp(p.position[k] + p.velocity[k], spec.lower[k], spec.upper[k]);
            }
            const double f = evaluate(spec, p.position, counter);
            p.value = f;
            best.offer(p.position, f);
            if (f < p.pbest_value) {
                p.pbest_value = f;
                p.pbest = p.position;
            }
            if (f < gbest_value) { // gbest updates as soon as it is beaten
                gbest_value = f;
                gbest = p.position;
            }
        }
        ++generation;
        if (capture_trace) trace.push_back(snapshot(swarm, generation, best.value));
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
