#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zoo {

/// Signals that an EvaluationBudget cannot fund another objective call.
/// Optimizers treat this as a clean stop, returning the best found so far.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-facing configuration (bad tags, sizes, JSON keys).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Axis-aligned search box. lower[d] < upper[d] for every dimension.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    Bounds(std::vector<double> lo, std::vector<double> hi);

    /// [lo, hi] replicated over `dim` dimensions.
    static Bounds cube(std::size_t dim, double lo, double hi);

    std::size_t dim() const { return lower.size(); }
    bool contains(std::span<const double> x) const;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
using ConstraintFn = std::function<double(std::span<const double>)>;

/// A minimization problem: objective over a box, plus optional inequality
/// constraints g_i(x) <= 0 handled through a static penalty. Objective and
/// constraint callables must be pure and thread-safe.
struct Problem {
    std::string name;
    std::size_t dim = 0;
    Bounds bounds = Bounds::cube(1, 0.0, 1.0);
    ObjectiveFn objective;
    std::vector<ConstraintFn> constraints;
    double penalty_weight = 1e8;
    std::optional<double> known_bias;
};

/// One evaluated point. fitness = objective_value + w * violation_sum.
struct Individual {
    std::vector<double> position;
    double objective_value = 0.0;
    double violation_sum = 0.0;
    double fitness = 0.0;
};

/// Hard cap on fitness evaluations. One budget per run, never shared.
class EvaluationBudget {
public:
    explicit EvaluationBudget(std::uint64_t max_fe);

    std::uint64_t max_fe() const { return max_fe_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t remaining() const { return max_fe_ - used_; }

    /// Throws BudgetExhausted (leaving the count unchanged) when spent.
    void consume_one();

private:
    std::uint64_t max_fe_;
    std::uint64_t used_ = 0;
};

/// Seeded random stream. The same seed yields the same draw sequence within
/// one build of the library. One stream per run, never shared across runs.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Uniform real on [a, b).
    double uniform(double a, double b);
    /// Standard normal variate.
    double normal();
    /// Uniform integer on [0, n). n must be positive.
    std::uint64_t uniform_int(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Coordinate-wise clip of x into the box. Throws std::invalid_argument on a
/// non-finite coordinate, naming the dimension.
std::vector<double> clamp_to_bounds(std::span<const double> x, const Bounds& bounds);
void clamp_to_bounds_inplace(std::vector<double>& x, const Bounds& bounds);

/// Evaluates the penalized objective at x, spending one budget unit.
/// Non-finite objective or constraint outputs map to +inf fitness so a
/// pathological candidate cannot kill a long benchmark batch.
Individual evaluate(const Problem& problem, std::span<const double> x, EvaluationBudget& budget);

/// n individuals drawn coordinate-wise uniform over the box, all evaluated.
std::vector<Individual> init_population(std::size_t n, const Bounds& bounds, RngStream& rng,
                                        const Problem& problem, EvaluationBudget& budget);

}  // namespace zoo
