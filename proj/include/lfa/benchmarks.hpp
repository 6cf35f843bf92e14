#ifndef LFA_BENCHMARKS_HPP
#define LFA_BENCHMARKS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfa {

/// One objective call per increment, never reset mid-run.
struct EvalCounter {
    std::uint64_t count = 0;
};

/// A test problem: objective, box bounds, and its known minimum. The
/// optimum_hint is absent for functions whose minimizer is not representable
/// to hint tolerance (Schwefel) or not unique (Shubert).
struct BenchmarkSpec {
    std::string name;
    int dimension = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    double optimum_value = 0.0;
    std::optional<std::vector<double>> optimum_hint;
    std::function<double(std::span<const double>)> objective;

    void validate() const; // throws std::invalid_argument
};

/// Evaluates spec.objective at x, counting the call.
double evaluate(const BenchmarkSpec& spec, std::span<const double> x, EvalCounter& counter);

// Objective functions. Each takes a non-empty position vector and returns the
// conventional literature value; bounds and minima are listed in the registry.
double ackley(std::span<const double> x);
double yang_forest(std::span<const double> x); // domain [-2pi, 2pi]^d
double dejong_sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x); // d >= 2
double schwefel(std::span<const double> x);
double rastrigin(std::span<const double> x);
double easom(std::span<const double> x); // d == 2
double griewank(std::span<const double> x);
double michalewicz(std::span<const double> x); // steepness m = 10, d <= 64
double shubert(std::span<const double> x);     // d == 2

/// Dispatch by registry name. Throws std::invalid_argument for unknown names.
double standard_function(std::string_view name, std::span<const double> x);

/// Registered function names, in registry order.
std::vector<std::string> registry_names();

/// True if `dimension` is valid for the named function.
bool dimension_supported(std::string_view name, int dimension);

/// Default dimension for the named function (desk-scale conventions).
int default_dimension(std::string_view name);

/// Builds the fully-populated problem spec. Throws std::invalid_argument for
/// unknown names or unsupported dimensions.
BenchmarkSpec lookup(std::string_view name, int dimension);
BenchmarkSpec lookup(std::string_view name); // default dimension

/// Machine-readable registry dump (name, dimension, bounds, optimum) used by
/// the harness and shipped as data/benchmarks.json.
std::string registry_json();

} // namespace lfa

#endif
