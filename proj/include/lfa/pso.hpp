#ifndef LFA_PSO_HPP
#define LFA_PSO_HPP

#include <cstdint>
#include <vector>

#include "lfa/benchmarks.hpp"
#include "lfa/run_result.hpp"

namespace lfa {

/// Plain particle-swarm optimizer without an inertia term:
///   v <- v + c1*r1*(pbest - x) + c2*r2*(gbest - x)   (r1, r2 per dimension)
///   x <- x + v                                        (clamped to bounds)
/// Velocities are clamped per dimension. Without inertia the swarm relies on
/// random initial velocities to avoid collapsing onto the first gbest with
/// zero momentum; initial_velocity selects that behaviour.
struct PsoParams {
    int population = 40;
    double c1 = 2.0;
    double c2 = 2.0;
    std::vector<double> velocity_cap; // per dimension; empty = scale * width
    double velocity_cap_scale = 0.002;
    enum class VelocityInit { zero, uniform } initial_velocity = VelocityInit::uniform;
    int max_generations = 10000;
    double epsilon = 1e-5;
    int stagnation_window = 10;
    double success_threshold = 1e-3;

    void validate() const;
};

RunResult pso_run(const BenchmarkSpec& spec, const PsoParams& params,
                  std::uint64_t seed, bool capture_trace = false);

} // namespace lfa

#endif
