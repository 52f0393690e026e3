#include "zoo/zso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zoo {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

std::vector<double> draw_unit_vector(std::size_t d, RngStream& rng) {
    std::vector<double> r(d);
    for (auto& v : r) v = rng.uniform(0.0, 1.0);
    return r;
}

std::size_t argmin_fitness(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness < pop[best].fitness) best = i;
    }
    return best;
}

std::size_t argmax_fitness(const std::vector<Individual>& pop) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness > pop[worst].fitness) worst = i;
    }
    return worst;
}

}  // namespace

std::pair<double, double> schedule_params(const HyperSchedule& schedule, std::uint64_t t,
                                          std::uint64_t t_max, RngStream& rng) {
    if (t_max == 0) throw std::invalid_argument("schedule_params: t_max must be positive");
    if (t > t_max) throw std::invalid_argument("schedule_params: t exceeds t_max");
    switch (schedule.kind) {
        case ScheduleKind::Constant:
            return {schedule.constant_alpha, schedule.constant_beta};
        case ScheduleKind::Linear: {
            double v = 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
            return {v, v};
        }
        case ScheduleKind::Uniform: {
            double a = rng.uniform(schedule.uniform_lo, schedule.uniform_hi);
            double b = rng.uniform(schedule.uniform_lo, schedule.uniform_hi);
            return {a, b};
        }
        case ScheduleKind::Gaussian: {
            // Negative draws would flip attraction into repulsion; clamp at 0.
            double a = schedule.gauss_mean + schedule.gauss_stddev * rng.normal();
            double b = schedule.gauss_mean + schedule.gauss_stddev * rng.normal();
            return {std::max(0.0, a), std::max(0.0, b)};
        }
    }
    throw std::logic_error("schedule_params: unknown schedule kind");
}

std::vector<double> prey_predator_step(std::span<const double> x, std::span<const double> best,
                                       std::span<const double> worst, double alpha,
                                       std::span<const double> r1, std::span<const double> r2) {
    require_same_dim(x.size(), best.size(), "prey_predator");
    require_same_dim(x.size(), worst.size(), "prey_predator");
    require_same_dim(x.size(), r1.size(), "prey_predator");
    require_same_dim(x.size(), r2.size(), "prey_predator");
    std::vector<double> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        out[d] = x[d] + alpha * r1[d] * (best[d] - x[d]) + alpha * r2[d] * (x[d] - worst[d]);
    }
    return out;
}

std::vector<double> prey_predator_move(std::span<const double> x, std::span<const double> best,
                                       std::span<const double> worst, double alpha,
                                       RngStream& rng) {
    auto r1 = draw_unit_vector(x.size(), rng);
    auto r2 = draw_unit_vector(x.size(), rng);
    return prey_predator_step(x, best, worst, alpha, r1, r2);
}

std::vector<double> social_flock_step(std::span<const double> x, std::span<const double> mean,
                                      std::span<const double> mate, double beta,
                                      std::span<const double> r3, std::span<const double> r4) {
    require_same_dim(x.size(), mean.size(), "social_flock");
    require_same_dim(x.size(), mate.size(), "social_flock");
    require_same_dim(x.size(), r3.size(), "social_flock");
    require_same_dim(x.size(), r4.size(), "social_flock");
    std::vector<double> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        out[d] = x[d] + beta * r3[d] * (mean[d] - x[d]) + beta * r4[d] * (mate[d] - x[d]);
    }
    return out;
}

std::vector<double> social_flock_move(std::span<const double> x, std::span<const double> mean,
                                      std::span<const double> mate, double beta, RngStream& rng) {
    auto r3 = draw_unit_vector(x.size(), rng);
    auto r4 = draw_unit_vector(x.size(), rng);
    return social_flock_step(x, mean, mate, beta, r3, r4);
}

Individual greedy_replace(Individual incumbent, Individual candidate) {
    return candidate.fitness <= incumbent.fitness ? std::move(candidate) : std::move(incumbent);
}

RunResult zso_run(const Problem& problem, const ZsoConfig& config, EvaluationBudget& budget) {
    const std::size_t n = config.population_size;
    if (n < 4) throw ConfigError("zso: population_size must be at least 4");
    const std::uint64_t available = budget.remaining();
    if (available < n) throw ConfigError("zso: budget cannot fund the initial population");

    RngStream rng(config.seed);
    auto pop = init_population(n, problem.bounds, rng, problem, budget);

    // Generation count available to the schedules, fixed by the 2N-per-
    // generation evaluation cost.
    const std::uint64_t t_max = (available - n) / (2 * n);

    RunResult result;
    std::vector<double> buffer;
    std::uint64_t t = 0;
    while (budget.remaining() >= 2 * n) {
        auto [alpha, beta] = schedule_params(config.schedule, t, t_max, rng);

        // Phase 1: prey-predator interaction, best/worst frozen at phase start.
        const std::vector<double> best_pos = pop[argmin_fitness(pop)].position;
        const std::vector<double> worst_pos = pop[argmax_fitness(pop)].position;
        for (std::size_t i = 0; i < n; ++i) {
            buffer = prey_predator_move(pop[i].position, best_pos, worst_pos, alpha, rng);
            clamp_to_bounds_inplace(buffer, problem.bounds);
            Individual candidate = evaluate(problem, buffer, budget);
            pop[i] = greedy_replace(std::move(pop[i]), std::move(candidate));
        }

        // Phase 2: social flocking around the refreshed population mean.
        std::vector<double> mean(problem.dim, 0.0);
        for (const auto& ind : pop) {
            for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += ind.position[d];
        }
        for (auto& m : mean) m /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t mate = rng.uniform_int(n - 1);
            if (mate >= i) ++mate;
            buffer = social_flock_move(pop[i].position, mean, pop[mate].position, beta, rng);
            clamp_to_bounds_inplace(buffer, problem.bounds);
            Individual candidate = evaluate(problem, buffer, budget);
            pop[i] = greedy_replace(std::move(pop[i]), std::move(candidate));
        }

        ++t;
        if (config.trace_enabled) {
            result.trace.push_back({budget.used(), pop[argmin_fitness(pop)].fitness});
        }
    }

    result.best = pop[argmin_fitness(pop)];
    result.fe_used = budget.used();
    result.generations = t;
    return result;
}

}  // namespace zoo
