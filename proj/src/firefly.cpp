#include "lfa/firefly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lfa {

namespace {

void clamp_to_bounds(std::vector<double>& x, std::span<const double> lower,
                     std::span<const double> upper) {
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = std::clamp(x[k], lower[k], upper[k]);
}

TraceFrame snapshot(const Swarm& swarm) {
    TraceFrame frame;
    frame.generation = swarm.generation;
    frame.positions.reserve(swarm.fireflies.size());
    frame.intensities.reserve(swarm.fireflies.size());
    for (const Firefly& f : swarm.fireflies) {
        frame.positions.push_back(f.position);
        frame.intensities.push_back(f.intensity);
    }
    frame.best_value = swarm.best.value;
    return frame;
}

} // namespace

void FireflyParams::validate() const {
    if (!(beta0 > 0.0)) throw std::invalid_argument("FireflyParams: beta0 must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("FireflyParams: gamma must be >= 0");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("FireflyParams: alpha must be in [0, 1]");
    if (!(m >= 1.0)) throw std::invalid_argument("FireflyParams: m must be >= 1");
    levy.validate();
    for (double s : scales)
        if (!(s > 0.0)) throw std::invalid_argument("FireflyParams: scales must be > 0");
    if (population < 2) throw std::invalid_argument("FireflyParams: population must be >= 2");
    if (max_generations < 0)
        throw std::invalid_argument("FireflyParams: max_generations must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("FireflyParams: epsilon must be > 0");
    if (stagnation_window < 1)
        throw std::invalid_argument("FireflyParams: stagnation_window must be >= 1");
    if (!(success_threshold > 0.0))
        throw std::invalid_argument("FireflyParams: success_threshold must be > 0");
}

double gamma_for_scale(double characteristic_length, double m) {
    if (!(characteristic_length > 0.0))
        throw std::invalid_argument("gamma_for_scale: length must be > 0");
    return 1.0 / std::pow(characteristic_length, m);
}

double attractiveness(double r, const FireflyParams& params) {
    if (!(r >= 0.0)) throw std::invalid_argument("attractiveness: r must be >= 0");
    if (params.gamma == 0.0) return params.beta0; // also avoids 0 * inf when r^m overflows
    const double rm = params.m == 2.0 ? r * r : std::pow(r, params.m);
    return params.beta0 * std::exp(-params.gamma * rm);
}

double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<double> effective_scales(const FireflyParams& params, const BenchmarkSpec& spec) {
    if (!params.scales.empty()) {
        if (params.scales.size() != static_cast<std::size_t>(spec.dimension))
            throw std::invalid_argument("FireflyParams: scales length != problem dimension");
        return params.scales;
    }
    std::vector<double> s(spec.dimension);
    for (int k = 0; k < spec.dimension; ++k)
        s[k] = (spec.upper[k] - spec.lower[k]) / 10.0;
    return s;
}

std::vector<double> move_toward(const Firefly& from, const Firefly& target,
                                const FireflyParams& params,
                                std::span<const double> scales,
                                std::span<const double> lower,
                                std::span<const double> upper, Rng& rng) {
    if (!(target.intensity > from.intensity))
        throw std::invalid_argument("move_toward: target must be strictly brighter");
    const std::size_t d = from.position.size();
    const double r = distance(from.position, target.position);
    const double beta = attractiveness(r, params);
    const std::vector<double> pert =
        levy_perturbation(d, params.alpha, scales, params.levy, rng);

    std::vector<double> x(d);
    if (beta == 1.0) {
        // Full attraction lands exactly on the target.
        for (std::size_t k = 0; k < d; ++k) x[k] = target.position[k] + pert[k];
    } else {
        for (std::size_t k = 0; k < d; ++k)
            x[k] = from.position[k] + beta * (target.position[k] - from.position[k]) + pert[k];
    }
    clamp_to_bounds(x, lower, upper);
    return x;
}

std::vector<double> random_walk(const Firefly& firefly, const FireflyParams& params,
                                std::span<const double> scales,
                                std::span<const double> lower,
                                std::span<const double> upper, Rng& rng) {
    const std::size_t d = firefly.position.size();
    const std::vector<double> pert =
        levy_perturbation(d, params.alpha, scales, params.levy, rng);
    std::vector<double> x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = firefly.position[k] + pert[k];
    clamp_to_bounds(x, lower, upper);
    return x;
}

void generation_step(Swarm& swarm, const FireflyParams& params,
                     const BenchmarkSpec& spec, std::span<const double> scales,
                     EvalCounter& counter, Rng& rng) {
    auto& ff = swarm.fireflies;
    const std::size_t n = ff.size();

    auto apply_move = [&](std::size_t mover, std::vector<double>&& x) {
        const double f = evaluate(spec, x, counter);
        swarm.best.offer(x, f);
        ff[mover].position = std::move(x);
        ff[mover].intensity = -f;
    };

    // Each distinct pair once; the strictly dimmer member moves and is
    // re-evaluated immediately, so later pairs see the updated intensity.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t mover, target;
            if (ff[j].intensity > ff[i].intensity) {
                mover = i;
                target = j;
            } else if (ff[i].intensity > ff[j].intensity) {
                mover = j;
                target = i;
            } else {
                continue; // equal intensity attracts nobody
            }
            apply_move(mover, move_toward(ff[mover], ff[target], params, scales,
                                          spec.lower, spec.upper, rng));
        }
    }

    // Brightest (ties -> lowest index) wanders.
    std::size_t b = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (ff[i].intensity > ff[b].intensity) b = i;
    apply_move(b, random_walk(ff[b], params, scales, spec.lower, spec.upper, rng));

    // Rank by descending intensity, ties keep index order.
    std::stable_sort(ff.begin(), ff.end(),
                     [](const Firefly& a, const Firefly& c) { return a.intensity > c.intensity; });
    ++swarm.generation;
}

RunResult firefly_run(const BenchmarkSpec& spec, const FireflyParams& params,
                      std::uint64_t seed, bool capture_trace) {
    spec.validate();
    params.validate();
    const std::vector<double> scales = effective_scales(params, spec);

    Rng rng(seed);
    EvalCounter counter;
    Swarm swarm;
    swarm.fireflies.resize(params.population);
    for (Firefly& f : swarm.fireflies) {
        f.position = uniform_in_bounds(spec.lower, spec.upper, rng);
        const double v = evaluate(spec, f.position, counter);
        swarm.best.offer(f.position, v);
        f.intensity = -v;
    }

    std::vector<TraceFrame> trace;
    if (capture_trace) trace.push_back(snapshot(swarm));

    std::vector<double> history;
    history.reserve(64);
    while (swarm.generation < params.max_generations) {
        generation_step(swarm, params, spec, scales, counter, rng);
        if (capture_trace) trace.push_back(snapshot(swarm));
        history.push_back(swarm.best.value);
        if (stagnated(history, params.epsilon, params.stagnation_window)) break;
    }

    RunResult result;
    result.best_position = swarm.best.position;
    result.best_value = swarm.best.value;
    result.evaluations = counter.count;
    result.success = std::fabs(swarm.best.value - spec.optimum_value) <= params.success_threshold;
    result.generations = swarm.generation;
    if (capture_trace) result.trace = std::move(trace);
    return result;
}

} // namespace lfa
