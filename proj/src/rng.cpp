#include "lfa/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lfa {

namespace {

// splitmix64, used only to expand the seed into generator state.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

// xoshiro256** step.
std::uint64_t Rng::next_raw() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform01() {
    return static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::bounded: n must be > 0");
    // rejection sampling, no modulo bias
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_raw();
        if (r >= threshold) return r % n;
    }
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

void LevyConfig::validate() const {
    if (!(lambda > 1.0 && lambda <= 3.0))
        throw std::invalid_argument("LevyConfig: lambda must be in (1, 3]");
    if (!(t_min > 0.0))
        throw std::invalid_argument("LevyConfig: t_min must be > 0");
    if (!(max_step_factor >= 1.0))
        throw std::invalid_argument("LevyConfig: max_step_factor must be >= 1");
}

double levy_step_from_u(const LevyConfig& cfg, double u) {
    cfg.validate();
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("levy_step_from_u: u must be in [0, 1)");
    const double t = cfg.t_min * std::pow(1.0 - u, -1.0 / (cfg.lambda - 1.0));
    const double cap = cfg.t_min * cfg.max_step_factor;
    return t < cap ? t : cap;
}

double sign_from_u(double u) { return u >= 0.5 ? 1.0 : -1.0; }

namespace {

double levy_step_unchecked(const LevyConfig& cfg, double inv_exponent, Rng& rng,
                           std::uint64_t* clip_counter) {
    const double u = rng.uniform01();
    const double raw = cfg.t_min * std::pow(1.0 - u, inv_exponent);
    const double cap = cfg.t_min * cfg.max_step_factor;
    if (raw >= cap) {
        if (clip_counter) ++*clip_counter;
        return cap;
    }
    return raw;
}

} // namespace

double levy_step(const LevyConfig& cfg, Rng& rng, std::uint64_t* clip_counter) {
    cfg.validate();
    return levy_step_unchecked(cfg, -1.0 / (cfg.lambda - 1.0), rng, clip_counter);
}

std::vector<double> levy_perturbation(std::size_t d, double alpha,
                                      std::span<const double> scales,
                                      const LevyConfig& cfg, Rng& rng,
                                      std::uint64_t* clip_counter) {
    if (d == 0) throw std::invalid_argument("levy_perturbation: d must be >= 1");
    if (scales.size() != d)
        throw std::invalid_argument("levy_perturbation: scales length != d");
    if (alpha < 0.0) throw std::invalid_argument("levy_perturbation: alpha must be >= 0");
    for (double s : scales)
        if (!(s > 0.0)) throw std::invalid_argument("levy_perturbation: scales must be > 0");
    cfg.validate();

    const double inv_exponent = -1.0 / (cfg.lambda - 1.0);
    std::vector<double> out(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double sign = sign_from_u(rng.uniform01());
        const double t = levy_step_unchecked(cfg, inv_exponent, rng, clip_counter);
        out[k] = alpha * scales[k] * sign * t;
    }
    return out;
}

std::vector<double> uniform_in_bounds(std::span<const double> lower,
                                      std::span<const double> upper, Rng& rng) {
    if (lower.size() != upper.size() || lower.empty())
        throw std::invalid_argument("uniform_in_bounds: bound vectors must match and be non-empty");
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (!(lower[k] < upper[k]))
            throw std::invalid_argument("uniform_in_bounds: lower must be < upper componentwise");
    std::vector<double> x(lower.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = rng.uniform(lower[k], upper[k]);
    return x;
}

} // namespace lfa
