#include "lfa/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace lfa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_nonempty(std::span<const double> x, const char* fn) {
    if (x.empty()) throw std::invalid_argument(std::string(fn) + ": empty input");
}

// Peak value of x*sin(sqrt(x)), attained near 420.9687; the additive constant
// in the Schwefel function. Written out past double precision.
constexpr double kSchwefelOffset = 418.98288727243371;

// Shubert (2-D) global minimum value; 18 global minimizers share it.
constexpr double kShubertMin = -186.73090883102384;

// Per-index maxima of sin(x) * sin^20(i*x^2/pi) over [0, pi], i = 1..64, and
// their locations. The Michalewicz function is separable, so its global
// minimum at dimension d is -(sum of the first d maxima) and the minimizer is
// the vector of locations. Regenerate with scripts/michalewicz_table.py.
constexpr int kMichalewiczMaxDim = 64;
constexpr double kMichalewiczTermMax[kMichalewiczMaxDim] = {
    0.80130341009855253, 1.0, 0.95909126989600595, 0.93846241847208341,
    0.98880108062150436, 1.0, 0.9932271353558816,  0.9828720362722106,
    0.99639436492510296, 1.0, 0.9973305415507682,  0.99209274152268202,
    0.99824298688316872, 1.0, 0.99858220472144441, 0.99546462863055877,
    0.99896341384478331, 1.0, 0.99912264222910087, 0.99706272432557359,
    0.99931694719873597, 1.0, 0.99940405391725593, 0.99794387931936109,
    0.9995162255918001,  1.0, 0.99956896092340001, 0.99848068785711886,
    0.9996394961673026,  1.0, 0.99967381014475328, 0.99883173592656242,
    0.99972101833774373, 1.0, 0.99974458364942958, 0.99907380607178515,
    0.99977771787384271, 1.0, 0.99979459395450003, 0.99924774839254482,
    0.99981873755125257, 1.0, 0.99983123469490913, 0.99937692208682928,
    0.99984936788504905, 1.0, 0.99985887912826528, 0.99945314725371258,
    0.99987284264125919, 1.0, 0.99988024830413614, 0.999552359818627,
    0.99989122874536722, 1.0, 0.99989710720741553, 0.99961350344044485,
    0.99990589734070947, 1.0, 0.99991064126605858, 0.9996514972401191,
    0.99991778703708549, 1.0, 0.99992167057836788, 0.99970343798823335,
};
constexpr double kMichalewiczArgmax[kMichalewiczMaxDim] = {
    2.2029055201726093, 1.5707963267948966, 1.2849915705529244, 1.9230584698663628,
    1.7204697725658413, 1.5707963267948966, 1.454413971362379,  1.7560865209450264,
    1.6557174168210291, 1.5707963267948966, 1.4977288035560709, 1.6966163007974611,
    1.6300760803964553, 1.5707963267948966, 1.517546114667673,  1.6660645117262648,
    1.6163286404365931, 1.5707963267948966, 1.5289070023558479, 1.6474563576741625,
    1.6077572958756855, 1.5707963267948966, 1.5362725270914305, 1.6349315066687144,
    1.601901830932964,  1.5707963267948966, 1.5414351505108375, 1.6259253839640808,
    1.5976479476620396, 1.5707963267948966, 1.545254594308228,  1.6191375696257293,
    1.5944175968845858, 1.5707963267948966, 1.5481947122229298, 1.6138382379740045,
    1.5918810347879197, 1.5707963267948966, 1.5505278218253233, 1.6095861073633857,
    1.5898364245489246, 1.5707963267948966, 1.5524243165954749, 1.606098656134408,
    1.5881532999150882, 1.5707963267948966, 1.5539962716121669, 1.5377239756210298,
    1.5867435810032711, 1.5707963267948966, 1.5553204269659075, 1.6007184125736889,
    1.5855456539760334, 1.5707963267948966, 1.5564510958940046, 1.5985997620908829,
    1.584515124986573,  1.5707963267948966, 1.5574277996452694, 1.5443948876098515,
    1.5836191971815231, 1.5707963267948966, 1.5582799821605119, 1.5951509222474657,
};

double michalewicz_minimum(int d) {
    double sum = 0.0;
    for (int i = 0; i < d; ++i) sum += kMichalewiczTermMax[i];
    return -sum;
}

struct RegistryEntry {
    const char* name;
    double lower, upper;
    int default_dim;
    int min_dim, max_dim; // inclusive; max_dim 0 means unbounded
    double (*fn)(std::span<const double>);
};

// Bounds and defaults follow the common literature conventions; dimensions
// without a conventional default use desk-scale values.
constexpr RegistryEntry kRegistry[] = {
    {"michalewicz", 0.0, kPi, 16, 1, kMichalewiczMaxDim, michalewicz},
    {"rosenbrock", -2.048, 2.048, 16, 2, 0, rosenbrock},
    {"dejong", -5.12, 5.12, 256, 1, 0, dejong_sphere},
    {"schwefel", -500.0, 500.0, 128, 1, 0, schwefel},
    {"ackley", -32.768, 32.768, 128, 1, 0, ackley},
    {"rastrigin", -5.12, 5.12, 16, 1, 0, rastrigin},
    {"easom", -100.0, 100.0, 2, 2, 2, easom},
    {"griewank", -600.0, 600.0, 16, 1, 0, griewank},
    {"yang", -kTwoPi, kTwoPi, 16, 1, 0, yang_forest},
    {"shubert", -10.0, 10.0, 2, 2, 2, shubert},
};

const RegistryEntry* find_entry(std::string_view name) {
    for (const auto& e : kRegistry)
        if (name == e.name) return &e;
    return nullptr;
}

const RegistryEntry& entry_or_throw(std::string_view name) {
    const RegistryEntry* e = find_entry(name);
    if (!e) throw std::invalid_argument("unknown function: " + std::string(name));
    return *e;
}

} // namespace

void BenchmarkSpec::validate() const {
    if (dimension < 1) throw std::invalid_argument("BenchmarkSpec: dimension must be >= 1");
    if (lower.size() != static_cast<std::size_t>(dimension) ||
        upper.size() != static_cast<std::size_t>(dimension))
        throw std::invalid_argument("BenchmarkSpec: bound vectors must have length = dimension");
    for (int k = 0; k < dimension; ++k)
        if (!(lower[k] < upper[k]))
            throw std::invalid_argument("BenchmarkSpec: lower must be < upper componentwise");
    if (optimum_hint && optimum_hint->size() != static_cast<std::size_t>(dimension))
        throw std::invalid_argument("BenchmarkSpec: optimum_hint length != dimension");
    if (!objective) throw std::invalid_argument("BenchmarkSpec: objective not set");
}

double evaluate(const BenchmarkSpec& spec, std::span<const double> x, EvalCounter& counter) {
    ++counter.count;
    return spec.objective(x);
}

double ackley(std::span<const double> x) {
    require_nonempty(x, "ackley");
    const double d = static_cast<double>(x.size());
    double ss = 0.0, sc = 0.0;
    for (double v : x) {
        ss += v * v;
        sc += std::cos(kTwoPi * v);
    }
    // Rearranged so that the value at the origin is exactly zero.
    return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(ss / d))) +
           (std::exp(1.0) - std::exp(sc / d));
}

double yang_forest(std::span<const double> x) {
    require_nonempty(x, "yang_forest");
    double sum_abs = 0.0, sum_sin = 0.0;
    for (double v : x) {
        if (!(v >= -kTwoPi && v <= kTwoPi))
            throw std::domain_error("yang_forest: x outside [-2pi, 2pi]");
        sum_abs += std::fabs(v);
        sum_sin += std::sin(v * v);
    }
    return sum_abs * std::exp(-sum_sin);
}

double dejong_sphere(std::span<const double> x) {
    require_nonempty(x, "dejong_sphere");
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rosenbrock(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("rosenbrock: needs dimension >= 2");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel(std::span<const double> x) {
    require_nonempty(x, "schwefel");
    double s = 0.0;
    for (double v : x) s += v * std::sin(std::sqrt(std::fabs(v)));
    return kSchwefelOffset * static_cast<double>(x.size()) - s;
}

double rastrigin(std::span<const double> x) {
    require_nonempty(x, "rastrigin");
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v);
    return 10.0 * static_cast<double>(x.size()) + s;
}

double easom(std::span<const double> x) {
    if (x.size() != 2) throw std::invalid_argument("easom: defined for dimension 2");
    const double a = x[0] - kPi, b = x[1] - kPi;
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(a * a + b * b));
}

double griewank(std::span<const double> x) {
    require_nonempty(x, "griewank");
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

double michalewicz(std::span<const double> x) {
    require_nonempty(x, "michalewicz");
    if (x.size() > kMichalewiczMaxDim)
        throw std::invalid_argument("michalewicz: supported up to dimension 64");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double si = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi);
        s += std::sin(x[i]) * std::pow(si, 20.0);
    }
    return -s;
}

double shubert(std::span<const double> x) {
    if (x.size() != 2) throw std::invalid_argument("shubert: defined for dimension 2");
    double p = 1.0;
    for (double v : x) {
        double s = 0.0;
        for (int i = 1; i <= 5; ++i)
            s += i * std::cos((i + 1.0) * v + i);
        p *= s;
    }
    return p;
}

double standard_function(std::string_view name, std::span<const double> x) {
    return entry_or_throw(name).fn(x);
}

std::vector<std::string> registry_names() {
    std::vector<std::string> out;
    for (const auto& e : kRegistry) out.emplace_back(e.name);
    return out;
}

bool dimension_supported(std::string_view name, int dimension) {
    const RegistryEntry& e = entry_or_throw(name);
    if (dimension < e.min_dim) return false;
    if (e.max_dim != 0 && dimension > e.max_dim) return false;
    return true;
}

int default_dimension(std::string_view name) { return entry_or_throw(name).default_dim; }

BenchmarkSpec lookup(std::string_view name, int dimension) {
    const RegistryEntry& e = entry_or_throw(name);
    if (!dimension_supported(name, dimension))
        throw std::invalid_argument("unsupported dimension for " + std::string(name) + ": " +
                                    std::to_string(dimension));
    BenchmarkSpec spec;
    spec.name = e.name;
    spec.dimension = dimension;
    spec.lower.assign(dimension, e.lower);
    spec.upper.assign(dimension, e.upper);
    spec.objective = e.fn;

    const std::string_view n = name;
    if (n == "michalewicz") {
        spec.optimum_value = michalewicz_minimum(dimension);
        spec.optimum_hint = std::vector<double>(kMichalewiczArgmax, kMichalewiczArgmax + dimension);
    } else if (n == "easom") {
        spec.optimum_value = -1.0;
        spec.optimum_hint = std::vector<double>{kPi, kPi};
    } else if (n == "rosenbrock") {
        spec.optimum_value = 0.0;
        spec.optimum_hint = std::vector<double>(dimension, 1.0);
    } else if (n == "shubert") {
        spec.optimum_value = kShubertMin; // 18 minimizers, no hint
    } else if (n == "schwefel") {
        // Minimizer near 420.9687 per coordinate; the value at the closest
        // double is ~1e-11 with 128 summands, beyond hint tolerance, so no
        // hint is recorded.
        spec.optimum_value = 0.0;
    } else {
        // Minimum 0 at the origin: ackley, dejong, rastrigin, griewank, yang.
        spec.optimum_value = 0.0;
        spec.optimum_hint = std::vector<double>(dimension, 0.0);
    }
    spec.validate();
    return spec;
}

BenchmarkSpec lookup(std::string_view name) {
    return lookup(name, default_dimension(name));
}

std::string registry_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : kRegistry) {
        nlohmann::json j;
        j["name"] = e.name;
        j["default_dimension"] = e.default_dim;
        j["min_dimension"] = e.min_dim;
        if (e.max_dim != 0) j["max_dimension"] = e.max_dim;
        j["lower"] = e.lower;
        j["upper"] = e.upper;
        const BenchmarkSpec spec = lookup(e.name, e.default_dim);
        j["optimum_value"] = spec.optimum_value;
        if (spec.optimum_hint) j["optimum_hint"] = *spec.optimum_hint;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

} // namespace lfa
