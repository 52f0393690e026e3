#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zoo/core.hpp"

namespace zoo {

/// Final best fitness of k independent trials of one (algorithm, problem) cell.
using SampleSet = std::vector<double>;

struct MannWhitneyResult {
    double u = 0.0;  // U statistic of the first sample, from midranks
    double p = 1.0;  // two-sided p-value, clamped to (0, 1]
};

/// Two-sided Mann-Whitney U test. Uses the normal approximation with tie
/// correction and 0.5 continuity correction; for very small inputs
/// (n1 + n2 <= 5, where that approximation is too coarse) the p-value comes
/// from exact enumeration over group assignments instead.
MannWhitneyResult mann_whitney_u(const SampleSet& a, const SampleSet& b);

/// Holm step-down adjustment. Sorted ascending, the i-th smallest p is
/// multiplied by (m - i + 1); a running maximum and a cap at 1 are applied;
/// results return in the original order.
std::vector<double> holm_adjust(const std::vector<double>& p);

/// Comparison marks, read as "the reference algorithm is ... than the other":
/// Plus = significantly better, Approx = no significant difference,
/// Minus = significantly worse. Everything minimizes.
enum class Mark { Plus, Approx, Minus };

const char* mark_symbol(Mark mark);  // "+", "≈" (UTF-8), "-"

Mark significance_mark(const SampleSet& reference, const SampleSet& other, double adjusted_p,
                       double alpha = 0.05);

double median(SampleSet values);

/// Per-problem ascending ranks of algorithm means (midranks on ties),
/// averaged across problems. means[a][p] is algorithm a's mean on problem p.
std::vector<double> average_ranks(const std::vector<std::vector<double>>& means);

struct ComparisonCell {
    double mean = 0.0;
    double stddev = 0.0;
    std::optional<double> raw_p;       // empty for the reference algorithm
    std::optional<double> adjusted_p;
    std::optional<Mark> mark;
};

struct MarkTally {
    int plus = 0;
    int approx = 0;
    int minus = 0;
};

/// The full comparison summary: per-cell statistics and marks, per-algorithm
/// average ranks and mark tallies against one reference algorithm. The Holm
/// family is the set of reference-vs-other tests within one problem.
struct ComparisonTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::size_t reference = 0;  // index into algorithms
    std::vector<std::vector<ComparisonCell>> cells;  // [algorithm][problem]
    std::vector<double> average_rank;                // [algorithm]
    std::vector<MarkTally> tallies;                  // [algorithm], zeros for reference
};

/// samples[a][p] holds the trial results of algorithm a on problem p; every
/// cell needs the same trial count within a problem.
ComparisonTable build_comparison(const std::vector<std::vector<SampleSet>>& samples,
                                 const std::vector<std::string>& algorithms,
                                 const std::vector<std::string>& problems, std::size_t reference,
                                 double alpha = 0.05);

}  // namespace zoo
