#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lfa/rng.hpp"

using namespace lfa;

TEST_CASE("identical seeds give identical sequences") {
    Rng a(42), b(42);
    const LevyConfig cfg{2.0, 1.0, 1e6};
    const std::vector<double> scales{1.0, 2.0, 0.5};
    for (int i = 0; i < 200; ++i) {
        CHECK(a.uniform01() == b.uniform01());
        CHECK(levy_step(cfg, a) == levy_step(cfg, b));
    }
    const std::vector<double> lo{-1.0, 0.0, 3.0}, hi{1.0, 5.0, 4.0};
    for (int i = 0; i < 50; ++i) {
        CHECK(uniform_in_bounds(lo, hi, a) == uniform_in_bounds(lo, hi, b));
        CHECK(levy_perturbation(3, 0.2, scales, cfg, a) ==
              levy_perturbation(3, 0.2, scales, cfg, b));
    }
    Rng c(43);
    CHECK(a.uniform01() != c.uniform01());
}

TEST_CASE("levy_step inverse-CDF closed forms") {
    // t = t_min * (1-u)^(-1/(lambda-1)), worked by hand:
    CHECK(levy_step_from_u({2.0, 1.0, 1e6}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(levy_step_from_u({2.0, 1.0, 1e6}, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(levy_step_from_u({1.5, 1.0, 1e6}, 0.75) == doctest::Approx(16.0).epsilon(1e-15));
    // scaling in t_min
    CHECK(levy_step_from_u({2.0, 0.25, 1e6}, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    // lambda = 3 is a legal edge
    CHECK(levy_step_from_u({3.0, 1.0, 1e6}, 0.75) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("levy_step sampling matches the transform of the same draw") {
    const LevyConfig cfg{1.5, 1.0, 1e6};
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i)
        CHECK(levy_step(cfg, a) == levy_step_from_u(cfg, b.uniform01()));
}

TEST_CASE("levy config validation") {
    Rng rng(1);
    CHECK_THROWS_AS(levy_step({1.0, 1.0, 1e6}, rng), std::invalid_argument);
    CHECK_THROWS_AS(levy_step({3.5, 1.0, 1e6}, rng), std::invalid_argument);
    CHECK_THROWS_AS(levy_step({2.0, 0.0, 1e6}, rng), std::invalid_argument);
    CHECK_THROWS_AS(levy_step({2.0, -1.0, 1e6}, rng), std::invalid_argument);
    CHECK_THROWS_AS(levy_step_from_u({2.0, 1.0, 1e6}, 1.0), std::invalid_argument);
}

TEST_CASE("steps never fall below t_min and respect the cap") {
    const LevyConfig cfg{1.5, 2.0, 1e6};
    Rng rng(11);
    std::uint64_t clips = 0;
    for (int i = 0; i < 100000; ++i) {
        const double t = levy_step(cfg, rng, &clips);
        CHECK(t >= cfg.t_min);
        CHECK(t <= cfg.t_min * cfg.max_step_factor);
    }
    // u close enough to 1 overflows the power law and must clip
    CHECK(levy_step_from_u({1.1, 1.0, 1e6}, 0.999999999) == doctest::Approx(1e6));
    // the clip counter records truncations when they happen
    const LevyConfig tight{1.5, 1.0, 4.0};
    std::uint64_t tight_clips = 0;
    Rng rng2(12);
    for (int i = 0; i < 2000; ++i) levy_step(tight, rng2, &tight_clips);
    // P(t > 4) = 1/2 for lambda = 1.5
    CHECK(tight_clips > 800);
    CHECK(tight_clips < 1200);
}

TEST_CASE("empirical median at lambda=2 within 5% of 2") {
    const LevyConfig cfg{2.0, 1.0, 1e6};
    Rng rng(101);
    std::vector<double> draws(100000);
    for (double& d : draws) d = levy_step(cfg, rng);
    std::nth_element(draws.begin(), draws.begin() + draws.size() / 2, draws.end());
    const double median = draws[draws.size() / 2];
    CHECK(median == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("survival tail matches x^-(lambda-1) within 3 standard errors") {
    const LevyConfig cfg{1.5, 1.0, 1e6};
    const int n = 100000;
    Rng rng(202);
    std::vector<double> draws(n);
    for (double& d : draws) d = levy_step(cfg, rng);
    for (double x : {4.0, 16.0, 64.0}) {
        const double expected = std::pow(x, -0.5);
        const double se = std::sqrt(expected * (1.0 - expected) / n);
        int count = 0;
        for (double d : draws)
            if (d > x) ++count;
        const double observed = static_cast<double>(count) / n;
        CHECK(std::fabs(observed - expected) < 3.0 * se);
    }
}

TEST_CASE("levy_perturbation composes sign and step per component") {
    const LevyConfig cfg{2.0, 1.0, 1e6};
    const std::vector<double> scales{1.0};

    // Forced draws U_sign = 0.9, U_step = 0.5: sign +1, step 2 -> +2.
    CHECK(sign_from_u(0.9) == 1.0);
    CHECK(sign_from_u(0.3) == -1.0);
    CHECK(sign_from_u(0.5) == 1.0); // boundary goes positive
    const double forced = 1.0 * scales[0] * sign_from_u(0.9) * levy_step_from_u(cfg, 0.5);
    CHECK(forced == doctest::Approx(2.0).epsilon(1e-15));

    // The sampler consumes (sign, step) per component in that order.
    Rng a(31), b(31);
    const std::vector<double> scales3{1.0, 0.5, 3.0};
    for (int rep = 0; rep < 50; ++rep) {
        const std::vector<double> p = levy_perturbation(3, 0.7, scales3, cfg, a);
        for (int k = 0; k < 3; ++k) {
            const double sign = sign_from_u(b.uniform01());
            const double step = levy_step_from_u(cfg, b.uniform01());
            CHECK(p[k] == 0.7 * scales3[k] * sign * step);
        }
    }
}

TEST_CASE("levy_perturbation zero alpha annihilates, bounds and errors") {
    const LevyConfig cfg{1.5, 1.0, 1e6};
    const std::vector<double> scales{1.0, 1.0};
    Rng rng(5);
    const std::vector<double> zero = levy_perturbation(2, 0.0, scales, cfg, rng);
    CHECK(zero == std::vector<double>{0.0, 0.0});

    for (int i = 0; i < 1000; ++i) {
        const std::vector<double> p = levy_perturbation(2, 0.2, scales, cfg, rng);
        for (double v : p) CHECK(std::fabs(v) >= 0.2 * cfg.t_min);
    }

    CHECK_THROWS_AS(levy_perturbation(3, 0.2, scales, cfg, rng), std::invalid_argument);
    CHECK_THROWS_AS(levy_perturbation(2, -0.1, scales, cfg, rng), std::invalid_argument);
    const std::vector<double> bad_scales{1.0, 0.0};
    CHECK_THROWS_AS(levy_perturbation(2, 0.2, bad_scales, cfg, rng), std::invalid_argument);
}

TEST_CASE("perturbation signs are symmetric") {
    const LevyConfig cfg{1.5, 1.0, 1e6};
    const std::vector<double> scales{1.0, 1.0};
    Rng rng(77);
    int pos[2] = {0, 0};
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const std::vector<double> p = levy_perturbation(2, 1.0, scales, cfg, rng);
        for (int k = 0; k < 2; ++k)
            if (p[k] > 0.0) ++pos[k];
    }
    for (int k = 0; k < 2; ++k) {
        const double freq = static_cast<double>(pos[k]) / n;
        CHECK(freq > 0.49);
        CHECK(freq < 0.51);
    }
}

TEST_CASE("uniform_in_bounds containment, mean and errors") {
    Rng rng(9);
    const std::vector<double> lo{0.0, 0.0}, hi{1.0, 1.0};
    for (int i = 0; i < 10000; ++i) {
        const std::vector<double> x = uniform_in_bounds(lo, hi, rng);
        CHECK(x[0] >= 0.0);
        CHECK(x[0] < 1.0);
        CHECK(x[1] >= 0.0);
        CHECK(x[1] < 1.0);
    }

    const std::vector<double> lo1{-5.0}, hi1{5.0};
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) sum += uniform_in_bounds(lo1, hi1, rng)[0];
    CHECK(std::fabs(sum / 10000.0) < 0.2); // law of large numbers

    const std::vector<double> same{1.0};
    CHECK_THROWS_AS(uniform_in_bounds(same, same, rng), std::invalid_argument);
    const std::vector<double> flipped_lo{2.0}, flipped_hi{1.0};
    CHECK_THROWS_AS(uniform_in_bounds(flipped_lo, flipped_hi, rng), std::invalid_argument);
}

TEST_CASE("gaussian and bounded basic sanity") {
    Rng rng(123);
    double sum = 0.0, ss = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        ss += g * g;
    }
    CHECK(std::fabs(sum / n) < 0.02);
    CHECK(ss / n == doctest::Approx(1.0).epsilon(0.03));

    int counts[5] = {0};
    for (int i = 0; i < 50000; ++i) ++counts[rng.bounded(5)];
    for (int c : counts) CHECK(c > 9000);
    CHECK_THROWS_AS(rng.bounded(0), std::invalid_argument);
}
