#pragma once

#include <cstdint>

#include "zoo/core.hpp"
#include "zoo/zso.hpp"

namespace zoo {

/// Global-best PSO with synchronous updates and a per-coordinate velocity clamp.
struct PsoConfig {
    double inertia = 1.0;
    double c1 = 2.05;
    double c2 = 2.05;
    double v_max = 2.0;
    double v_min = -2.0;
};

/// DE/current-to-best/1 with binomial crossover.
struct DeConfig {
    double scale_f = 0.8;
    double crossover_cr = 0.9;
};

/// One particle's velocity update, clamped per coordinate to
/// [v_min, v_max]. r1, r2 are per-dimension U(0,1) vectors.
///   v' = w * v + c1 * r1 .* (pbest - x) + c2 * r2 .* (gbest - x)
std::vector<double> pso_velocity_step(std::span<const double> velocity,
                                      std::span<const double> x, std::span<const double> pbest,
                                      std::span<const double> gbest, const PsoConfig& config,
                                      std::span<const double> r1, std::span<const double> r2);

/// DE/current-to-best/1 mutant: x_i + F * (best - x_i) + F * (r1 - r2).
std::vector<double> de_mutant(std::span<const double> xi, std::span<const double> xbest,
                              std::span<const double> xr1, std::span<const double> xr2, double f);

/// Binomial crossover taking the mutant coordinate with probability cr, and
/// always at the forced dimension.
std::vector<double> de_crossover(std::span<const double> parent, std::span<const double> mutant,
                                 double cr, std::size_t forced, RngStream& rng);

RunResult pso_run(const Problem& problem, const PsoConfig& config, std::size_t n,
                  std::uint64_t seed, EvaluationBudget& budget);

RunResult de_run(const Problem& problem, const DeConfig& config, std::size_t n,
                 std::uint64_t seed, EvaluationBudget& budget);

/// Uniform sampling over the box until the budget runs out; the sanity floor
/// every optimizer is expected to beat.
RunResult random_search_run(const Problem& problem, std::size_t n, std::uint64_t seed,
                            EvaluationBudget& budget);

}  // namespace zoo
