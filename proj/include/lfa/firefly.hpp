#ifndef LFA_FIREFLY_HPP
#define LFA_FIREFLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lfa/benchmarks.hpp"
#include "lfa/rng.hpp"
#include "lfa/run_result.hpp"

namespace lfa {

/// Firefly-algorithm constants. Distances are measured in raw problem
/// coordinates, so gamma carries units of 1/length^m; for a problem with
/// characteristic length G use gamma = 1/G^m (see gamma_for_scale).
struct FireflyParams {
    double beta0 = 1.0;  // attractiveness at distance 0
    double gamma = 1.0;  // absorption coefficient
    double alpha = 0.2;  // randomization weight in [0, 1]
    double m = 2.0;      // attenuation exponent, >= 1
    LevyConfig levy{};   // lambda = 1.5, t_min = 1 by default
    std::vector<double> scales; // per-dimension S_k; empty = (upper-lower)/10
    int population = 40;
    int max_generations = 10000;
    double epsilon = 1e-5;          // stagnation tolerance
    int stagnation_window = 10;     // generations
    double success_threshold = 1e-3;

    void validate() const; // throws std::invalid_argument
};

/// gamma such that attractiveness decays by 1/e over characteristic_length.
double gamma_for_scale(double characteristic_length, double m = 2.0);

struct Firefly {
    std::vector<double> position;
    double intensity = 0.0; // -objective at position, refreshed after every move
};

struct Swarm {
    std::vector<Firefly> fireflies;
    int generation = 0;
    BestTracker best; // best-so-far over every evaluation
};

/// beta0 * exp(-gamma * r^m); equals beta0 at r = 0 and for gamma = 0.
double attractiveness(double r, const FireflyParams& params);

/// Euclidean distance. Throws std::invalid_argument on dimension mismatch.
double distance(std::span<const double> a, std::span<const double> b);

/// One attraction move of the dimmer firefly `from` toward the brighter
/// `target` (Cartesian distance, generalized attractiveness, additive Levy
/// perturbation), clamped to bounds. Requires target.intensity >
/// from.intensity. Returns the new position; does not evaluate it.
std::vector<double> move_toward(const Firefly& from, const Firefly& target,
                                const FireflyParams& params,
                                std::span<const double> scales,
                                std::span<const double> lower,
                                std::span<const double> upper, Rng& rng);

/// Levy random walk of the (joint-)brightest firefly, clamped to bounds.
std::vector<double> random_walk(const Firefly& firefly, const FireflyParams& params,
                                std::span<const double> scales,
                                std::span<const double> lower,
                                std::span<const double> upper, Rng& rng);

/// One generation: every distinct pair is scanned once (i from 1..n-1, j < i)
/// and the strictly dimmer member moves toward the brighter with an immediate
/// re-evaluation; ties attract nobody. The brightest firefly then performs a
/// random walk, and the swarm is re-ranked by descending intensity (ties keep
/// index order).
void generation_step(Swarm& swarm, const FireflyParams& params,
                     const BenchmarkSpec& spec, std::span<const double> scales,
                     EvalCounter& counter, Rng& rng);

/// Full optimization run per the generation loop above. Stops when the
/// best-so-far improvement over `stagnation_window` generations falls below
/// epsilon, or at max_generations. Deterministic given the seed.
RunResult firefly_run(const BenchmarkSpec& spec, const FireflyParams& params,
                      std::uint64_t seed, bool capture_trace = false);

/// Scales actually used by a run: params.scales, or (upper-lower)/10 when
/// empty.
std::vector<double> effective_scales(const FireflyParams& params, const BenchmarkSpec& spec);

} // namespace lfa

#endif
