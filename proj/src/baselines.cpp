#include "zoo/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace zoo {

namespace {

std::size_t argmin_fitness(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness < pop[best].fitness) best = i;
    }
    return best;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

std::vector<double> pso_velocity_step(std::span<const double> velocity,
                                      std::span<const double> x, std::span<const double> pbest,
                                      std::span<const double> gbest, const PsoConfig& config,
                                      std::span<const double> r1, std::span<const double> r2) {
    require_same_dim(velocity.size(), x.size(), "pso_velocity_step");
    require_same_dim(velocity.size(), pbest.size(), "pso_velocity_step");
    require_same_dim(velocity.size(), gbest.size(), "pso_velocity_step");
    require_same_dim(velocity.size(), r1.size(), "pso_velocity_step");
    require_same_dim(velocity.size(), r2.size(), "pso_velocity_step");
    std::vector<double> out(velocity.size());
    for (std::size_t d = 0; d < out.size(); ++d) {
        double v = config.inertia * velocity[d] + config.c1 * r1[d] * (pbest[d] - x[d]) +
                   config.c2 * r2[d] * (gbest[d] - x[d]);
        out[d] = std::min(config.v_max, std::max(config.v_min, v));
    }
    return out;
}

std::vector<double> de_mutant(std::span<const double> xi, std::span<const double> xbest,
                              std::span<const double> xr1, std::span<const double> xr2, double f) {
    require_same_dim(xi.size(), xbest.size(), "de_mutant");
    require_same_dim(xi.size(), xr1.size(), "de_mutant");
    require_same_dim(xi.size(), xr2.size(), "de_mutant");
    std::vector<double> out(xi.size());
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d] = xi[d] + f * (xbest[d] - xi[d]) + f * (xr1[d] - xr2[d]);
    }
    return out;
}

std::vector<double> de_crossover(std::span<const double> parent, std::span<const double> mutant,
                                 double cr, std::size_t forced, RngStream& rng) {
    require_same_dim(parent.size(), mutant.size(), "de_crossover");
    if (forced >= parent.size()) throw std::invalid_argument("de_crossover: forced dim out of range");
    std::vector<double> out(parent.size());
    for (std::size_t d = 0; d < out.size(); ++d) {
        const bool take = d == forced || rng.uniform(0.0, 1.0) < cr;
        out[d] = take ? mutant[d] : parent[d];
    }
    return out;
}

RunResult pso_run(const Problem& problem, const PsoConfig& config, std::size_t n,
                  std::uint64_t seed, EvaluationBudget& budget) {
    if (n == 0) throw ConfigError("pso: population size must be positive");
    if (!(config.v_min < config.v_max)) throw ConfigError("pso: v_min must be below v_max");
    if (budget.remaining() < n) throw ConfigError("pso: budget cannot fund the initial swarm");

    const std::size_t dim = problem.dim;
    RngStream rng(seed);
    auto swarm = init_population(n, problem.bounds, rng, problem, budget);

    std::vector<std::vector<double>> velocity(n, std::vector<double>(dim));
    for (auto& v : velocity) {
        for (auto& vd : v) vd = rng.uniform(config.v_min, config.v_max);
    }

    std::vector<Individual> pbest = swarm;
    Individual gbest = pbest[argmin_fitness(pbest)];

    RunResult result;
    std::vector<double> x(dim), r1(dim), r2(dim);
    while (budget.remaining() >= n) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                r1[d] = rng.uniform(0.0, 1.0);
                r2[d] = rng.uniform(0.0, 1.0);
            }
            velocity[i] = pso_velocity_step(velocity[i], swarm[i].position, pbest[i].position,
                                            gbest.position, config, r1, r2);
            for (std::size_t d = 0; d < dim; ++d) x[d] = swarm[i].position[d] + velocity[i][d];
            clamp_to_bounds_inplace(x, problem.bounds);
            swarm[i] = evaluate(problem, x, budget);
            if (swarm[i].fitness < pbest[i].fitness) pbest[i] = swarm[i];
        }
        // gbest moves once per generation (synchronous update).
        const Individual& leader = pbest[argmin_fitness(pbest)];
        if (leader.fitness < gbest.fitness) gbest = leader;
        ++result.generations;
        result.trace.push_back({budget.used(), gbest.fitness});
    }

    result.best = gbest;
    result.fe_used = budget.used();
    return result;
}

RunResult de_run(const Problem& problem, const DeConfig& config, std::size_t n,
                 std::uint64_t seed, EvaluationBudget& budget) {
    if (n < 4) throw ConfigError("de: population size must be at least 4");
    if (config.crossover_cr < 0.0 || config.crossover_cr > 1.0) {
        throw ConfigError("de: crossover rate must lie in [0, 1]");
    }
    if (!(config.scale_f > 0.0)) throw ConfigError("de: scale factor must be positive");
    if (budget.remaining() < n) throw ConfigError("de: budget cannot fund the initial population");

    const std::size_t dim = problem.dim;
    RngStream rng(seed);
    auto pop = init_population(n, problem.bounds, rng, problem, budget);

    RunResult result;
    while (budget.remaining() >= n) {
        const std::size_t best = argmin_fitness(pop);
        std::vector<Individual> next = pop;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r1 = rng.uniform_int(n);
            while (r1 == i) r1 = rng.uniform_int(n);
            std::size_t r2 = rng.uniform_int(n);
            while (r2 == i || r2 == r1) r2 = rng.uniform_int(n);

            const auto mutant = de_mutant(pop[i].position, pop[best].position, pop[r1].position,
                                          pop[r2].position, config.scale_f);
            auto trial = de_crossover(pop[i].position, mutant, config.crossover_cr,
                                      rng.uniform_int(dim), rng);
            clamp_to_bounds_inplace(trial, problem.bounds);
            Individual candidate = evaluate(problem, trial, budget);
            if (candidate.fitness <= pop[i].fitness) next[i] = std::move(candidate);
        }
        pop = std::move(next);
        ++result.generations;
        result.trace.push_back({budget.used(), pop[argmin_fitness(pop)].fitness});
    }

    result.best = pop[argmin_fitness(pop)];
    result.fe_used = budget.used();
    return result;
}

RunResult random_search_run(const Problem& problem, std::size_t n, std::uint64_t seed,
                            EvaluationBudget& budget) {
    if (n == 0) throw ConfigError("random search: batch size must be positive");
    if (budget.remaining() == 0) throw ConfigError("random search: empty budget");

    RngStream rng(seed);
    RunResult result;
    std::vector<double> x(problem.dim);
    bool have_best = false;
    while (budget.remaining() > 0) {
        const std::uint64_t batch = std::min<std::uint64_t>(n, budget.remaining());
        for (std::uint64_t k = 0; k < batch; ++k) {
            for (std::size_t d = 0; d < problem.dim; ++d) {
                x[d] = rng.uniform(problem.bounds.lower[d], problem.bounds.upper[d]);
            }
            Individual candidate = evaluate(problem, x, budget);
            if (!have_best || candidate.fitness < result.best.fitness) {
                result.best = std::move(candidate);
                have_best = true;
            }
        }
        ++result.generations;
        result.trace.push_back({budget.used(), result.best.fitness});
    }
    result.fe_used = budget.used();
    return result;
}

}  // namespace zoo
