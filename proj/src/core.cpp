#include "zoo/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zoo {

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("bounds need matching, non-empty lower/upper vectors");
    }
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (!(lower[d] < upper[d])) {
            throw std::invalid_argument("bounds require lower < upper at dimension " +
                                        std::to_string(d));
        }
    }
}

Bounds Bounds::cube(std::size_t dim, double lo, double hi) {
    return Bounds(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] < lower[d] || x[d] > upper[d]) return false;
    }
    return true;
}

EvaluationBudget::EvaluationBudget(std::uint64_t max_fe) : max_fe_(max_fe) {
    if (max_fe == 0) throw std::invalid_argument("budget max_fe must be positive");
}

void EvaluationBudget::consume_one() {
    if (used_ >= max_fe_) throw BudgetExhausted("evaluation budget exhausted");
    ++used_;
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

double RngStream::uniform(double a, double b) {
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
    double v = a + (b - a) * u;
    if (v >= b) v = std::nextafter(b, a);
    return v;
}

double RngStream::normal() { return normal_(gen_); }

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int needs n > 0");
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_);
}

void clamp_to_bounds_inplace(std::vector<double>& x, const Bounds& bounds) {
    if (x.size() != bounds.dim()) {
        throw std::invalid_argument("clamp: dimension mismatch");
    }
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (!std::isfinite(x[d])) {
            throw std::invalid_argument("clamp: non-finite coordinate at dimension " +
                                        std::to_string(d));
        }
        x[d] = std::min(bounds.upper[d], std::max(bounds.lower[d], x[d]));
    }
}

std::vector<double> clamp_to_bounds(std::span<const double> x, const Bounds& bounds) {
    std::vector<double> out(x.begin(), x.end());
    clamp_to_bounds_inplace(out, bounds);
    return out;
}

Individual evaluate(const Problem& problem, std::span<const double> x, EvaluationBudget& budget) {
    if (x.size() != problem.dim) {
        throw std::invalid_argument("evaluate: position dimension mismatch");
    }
    budget.consume_one();

    constexpr double kInf = std::numeric_limits<double>::infinity();
    Individual ind;
    ind.position.assign(x.begin(), x.end());

    double obj = problem.objective(x);
    if (!std::isfinite(obj)) obj = kInf;

    double violation = 0.0;
    for (const auto& g : problem.constraints) {
        double gi = g(x);
        if (std::isnan(gi)) gi = kInf;
        violation += std::max(0.0, gi);
    }

    ind.objective_value = obj;
    ind.violation_sum = violation;
    ind.fitness = obj + problem.penalty_weight * violation;
    if (std::isnan(ind.fitness)) ind.fitness = kInf;
    return ind;
}

std::vector<Individual> init_population(std::size_t n, const Bounds& bounds, RngStream& rng,
                                        const Problem& problem, EvaluationBudget& budget) {
    if (n == 0) throw std::invalid_argument("init_population needs n > 0");
    if (n > budget.remaining()) {
        throw BudgetExhausted("initial population does not fit in the remaining budget");
    }
    std::vector<Individual> pop;
    pop.reserve(n);
    std::vector<double> x(bounds.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d < bounds.dim(); ++d) {
            x[d] = rng.uniform(bounds.lower[d], bounds.upper[d]);
        }
        pop.push_back(evaluate(problem, x, budget));
    }
    return pop;
}

}  // namespace zoo
