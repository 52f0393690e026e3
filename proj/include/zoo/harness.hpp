#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zoo/core.hpp"
#include "zoo/stats.hpp"

namespace zoo {

/// Algorithm tags the harness can run.
const std::vector<std::string>& algorithm_tags();
bool is_algorithm_tag(std::string_view tag);

/// One experiment: a problem set crossed with algorithms and trials.
/// Synthetic problems get 1000 * D evaluations, engineering problems 20,000,
/// unless fe_override is set.
struct ExperimentConfig {
    std::string suite = "cec2022";          // cec2014 | cec2022 | engineering | custom
    std::vector<std::string> problems;      // resolved tags (filled for custom)
    std::vector<int> dims;                  // synthetic suites only
    std::vector<std::string> algorithms;
    int trials = 30;
    int population = 100;
    std::uint64_t base_seed = 12345;
    std::uint64_t fe_override = 0;          // 0 = per-suite rule
    std::string out_csv = "results.csv";
    std::string trace_dir;                  // empty = traces disabled
};

/// Parses and validates the JSON experiment file. Unset keys take defaults;
/// unknown keys are rejected. Errors name the offending key.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig load_config_from_string(const std::string& json_text);

/// One (problem, algorithm, trial) outcome, in results CSV column order.
struct ResultRow {
    std::string suite;
    std::string problem;
    int dim = 0;
    std::string algorithm;
    int trial = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    double best_raw_objective = 0.0;
    bool feasible = true;
    std::uint64_t fe_used = 0;
    std::uint64_t generations = 0;
    double wall_ms = 0.0;
    std::string error;  // empty on success; a failed cell never stops the matrix
};

/// Runs every cell of the matrix. The trial seed of cell k (lexicographic
/// over problem, algorithm, trial) is base_seed + 1000003 * k. The results
/// CSV is written incrementally in cell order, header first, one flush per
/// row, so output is byte-stable for any worker count and partial results
/// survive a crash. One JSON-lines trace file per cell is written when
/// trace_dir is set.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config, int workers = 1);

/// Recomputes the comparison table from a results CSV against one reference
/// algorithm and writes <out_prefix>.csv and <out_prefix>.txt.
ComparisonTable stats_report(const std::string& results_csv_path,
                             const std::string& reference_algorithm,
                             const std::string& out_prefix);

/// Rendering helpers shared by stats_report and the CLI.
std::string comparison_table_csv(const ComparisonTable& table);
std::string comparison_table_text(const ComparisonTable& table);

}  // namespace zoo
