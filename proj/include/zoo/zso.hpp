#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zoo/core.hpp"

namespace zoo {

/// Generation-indexed policy for the two step-scale hyperparameters.
enum class ScheduleKind { Constant, Linear, Uniform, Gaussian };

struct HyperSchedule {
    ScheduleKind kind = ScheduleKind::Constant;
    // Constant variant
    double constant_alpha = 1.0;
    double constant_beta = 1.0;
    // Uniform variant, draws on [lo, hi)
    double uniform_lo = 0.5;
    double uniform_hi = 1.5;
    // Gaussian variant
    double gauss_mean = 1.0;
    double gauss_stddev = 0.5;

    static HyperSchedule constant() { return {ScheduleKind::Constant}; }
    static HyperSchedule linear() { return {ScheduleKind::Linear}; }
    static HyperSchedule uniform() { return {ScheduleKind::Uniform}; }
    static HyperSchedule gaussian() { return {ScheduleKind::Gaussian}; }
};

struct ZsoConfig {
    std::size_t population_size = 100;  // at least 4
    HyperSchedule schedule;
    std::uint64_t seed = 0;
    bool trace_enabled = true;
};

struct TracePoint {
    std::uint64_t fe = 0;
    double best = 0.0;
};
using ConvergenceTrace = std::vector<TracePoint>;

/// Outcome shared by every optimizer in this library: the best individual,
/// evaluation/generation counts, and a per-generation best-so-far trace.
struct RunResult {
    Individual best;
    std::uint64_t fe_used = 0;
    std::uint64_t generations = 0;
    ConvergenceTrace trace;
};

/// (alpha, beta) for 0-based generation t out of t_max.
///   Constant -> (1, 1)
///   Linear   -> both 2 * (1 - t / t_max)
///   Uniform  -> two independent draws from U(0.5, 1.5)
///   Gaussian -> two independent draws from N(1, 0.5), clamped at 0
std::pair<double, double> schedule_params(const HyperSchedule& schedule, std::uint64_t t,
                                          std::uint64_t t_max, RngStream& rng);

/// Phase-1 operator: attraction toward the population best plus repulsion
/// from the population worst. r1, r2 are per-dimension U(0,1) vectors.
///   out = x + alpha * r1 .* (best - x) + alpha * r2 .* (x - worst)
std::vector<double> prey_predator_step(std::span<const double> x, std::span<const double> best,
                                       std::span<const double> worst, double alpha,
                                       std::span<const double> r1, std::span<const double> r2);
std::vector<double> prey_predator_move(std::span<const double> x, std::span<const double> best,
                                       std::span<const double> worst, double alpha,
                                       RngStream& rng);

/// Phase-2 operator: attraction toward the population mean and a random
/// flock-mate. r3, r4 are per-dimension U(0,1) vectors.
///   out = x + beta * r3 .* (mean - x) + beta * r4 .* (mate - x)
std::vector<double> social_flock_step(std::span<const double> x, std::span<const double> mean,
                                      std::span<const double> mate, double beta,
                                      std::span<const double> r3, std::span<const double> r4);
std::vector<double> social_flock_move(std::span<const double> x, std::span<const double> mean,
                                      std::span<const double> mate, double beta, RngStream& rng);

/// Candidate wins on ties so the population can drift across plateaus.
Individual greedy_replace(Individual incumbent, Individual candidate);

/// The ZSO loop. Initialization costs N evaluations; every generation then
/// costs exactly 2N (each operator re-evaluates the whole population). The
/// run stops once the budget cannot fund a full generation, so
/// fe_used = N + 2 * N * generations. Best and worst are tracked by linear
/// scan, never by sorting.
RunResult zso_run(const Problem& problem, const ZsoConfig& config, EvaluationBudget& budget);

}  // namespace zoo
