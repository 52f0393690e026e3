#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zoo/core.hpp"

namespace zoo {

/// Static penalty: f + w * sum(max(0, g_i)).
double penalized_fitness(double f_value, std::span<const double> violations, double w);

/// The six constrained engineering design problems, addressable by their
/// abbreviations: CBD, CBHD, GTD, IBD, RCB, SRD. Formulations follow the
/// standard published versions; dimension and constraint counts are checked
/// at construction time.
Problem make_engineering(std::string_view name);

const std::vector<std::string>& engineering_catalog();
bool is_engineering_tag(std::string_view name);

struct ViolationReport {
    bool feasible = true;
    std::vector<double> per_constraint;  // max(0, g_i(x)) per constraint
};
ViolationReport violation_report(const Problem& problem, std::span<const double> x);

/// Exhaustive minimum of the gear train objective over the 12..60 integer
/// grid. Independent of the optimizer path; backs the `oracle gtd` command.
struct GearTrainOptimum {
    double value = 0.0;
    std::array<int, 4> teeth{};
};
GearTrainOptimum gear_train_grid_minimum();

}  // namespace zoo
