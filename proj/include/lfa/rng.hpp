#ifndef LFA_RNG_HPP
#define LFA_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace lfa {

/// Seedable deterministic random source. Two instances built from the same
/// seed produce identical sample sequences. Not shareable across threads;
/// create one per trial.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n);

    /// Standard normal deviate (polar Box-Muller, cached spare).
    double gaussian();

  private:
    std::uint64_t next_raw();

    std::uint64_t state_[4];
    std::uint64_t seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Heavy-tailed step-length law: survival P(T > t) = (t / t_min)^-(lambda-1),
/// i.e. tail density proportional to t^-lambda on [t_min, inf).
struct LevyConfig {
    double lambda = 1.5;          // exponent, 1 < lambda <= 3
    double t_min = 1.0;           // minimum step length, > 0
    double max_step_factor = 1e6; // single-step cap, in units of t_min

    void validate() const; // throws std::invalid_argument
};

/// Inverse-CDF transform: t = t_min * (1 - u)^(-1/(lambda-1)) for u in [0,1),
/// clamped to t_min * max_step_factor. Pure; exposed for oracle tests.
double levy_step_from_u(const LevyConfig& cfg, double u);

/// +1 if u >= 1/2, else -1.
double sign_from_u(double u);

/// Draws one step length. If clip_counter is non-null it is incremented each
/// time the cap truncates a draw.
double levy_step(const LevyConfig& cfg, Rng& rng, std::uint64_t* clip_counter = nullptr);

/// d-dimensional displacement with component k = alpha * scales[k] * sign * t,
/// sign and t drawn independently per component (sign draw first, then step).
/// scales.size() must equal d.
std::vector<double> levy_perturbation(std::size_t d, double alpha,
                                      std::span<const double> scales,
                                      const LevyConfig& cfg, Rng& rng,
                                      std::uint64_t* clip_counter = nullptr);

/// Componentwise uniform position in [lower[k], upper[k]). Requires
/// lower[k] < upper[k] for every k.
std::vector<double> uniform_in_bounds(std::span<const double> lower,
                                      std::span<const double> upper, Rng& rng);

} // namespace lfa

#endif
