#ifndef LFA_RUN_RESULT_HPP
#define LFA_RUN_RESULT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace lfa {

/// Per-generation swarm snapshot; index 0 is the initial population.
struct TraceFrame {
    int generation = 0;
    std::vector<std::vector<double>> positions; // one entry per agent
    std::vector<double> intensities;            // -objective, parallel to positions
    double best_value = 0.0;                    // best-so-far at snapshot time
};

struct RunResult {
    std::vector<double> best_position;
    double best_value = std::numeric_limits<double>::infinity();
    std::uint64_t evaluations = 0;
    bool success = false;
    int generations = 0;
    std::optional<std::vector<TraceFrame>> trace;
};

/// Best-so-far record, updated on every objective evaluation.
struct BestTracker {
    double value = std::numeric_limits<double>::infinity();
    std::vector<double> position;

    void offer(std::span<const double> x, double f) {
        if (f < value) {
            value = f;
            position.assign(x.begin(), x.end());
        }
    }
};

/// Stop when the best-so-far improvement over the trailing `window`
/// generations drops below eps. `history` holds one best-so-far value per
/// completed generation.
inline bool stagnated(std::span<const double> history, double eps, int window) {
    const std::size_t n = history.size();
    if (n < static_cast<std::size_t>(window) + 1) return false;
    return history[n - 1 - window] - history[n - 1] < eps;
}

} // namespace lfa

#endif
