#include "zoo/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zoo {

namespace {

double cube(double v) { return v * v * v; }
double sq(double v) { return v * v; }

Problem cantilever_beam() {
    Problem p;
    p.name = "CBD";
    p.dim = 5;
    p.bounds = Bounds::cube(5, 0.01, 100.0);
    p.objective = [](std::span<const double> x) {
        return 0.0624 * (x[0] + x[1] + x[2] + x[3] + x[4]);
    };
    p.constraints = {[](std::span<const double> x) {
        return 61.0 / cube(x[0]) + 37.0 / cube(x[1]) + 19.0 / cube(x[2]) + 7.0 / cube(x[3]) +
               1.0 / cube(x[4]) - 1.0;
    }};
    return p;
}

// x = (width, depth, length, plate thickness), weight objective.
Problem corrugated_bulkhead() {
    Problem p;
    p.name = "CBHD";
    p.dim = 4;
    p.bounds = Bounds({0.0, 0.0, 0.0, 0.0}, {100.0, 100.0, 100.0, 5.0});
    p.objective = [](std::span<const double> x) {
        double b = x[0], h = x[1], l = x[2], t = x[3];
        return (5.885 * t * (b + l)) / (b + std::sqrt(l * l - h * h));
    };
    auto width = [](std::span<const double> x) {
        return x[0] + std::sqrt(x[2] * x[2] - x[1] * x[1]);
    };
    p.constraints = {
        [width](std::span<const double> x) {
            return -x[3] * x[1] * (0.4 * x[0] + x[2] / 6.0) + 8.94 * width(x);
        },
        [width](std::span<const double> x) {
            return -x[3] * sq(x[1]) * (0.2 * x[0] + x[2] / 12.0) +
                   2.2 * std::pow(8.94 * width(x), 4.0 / 3.0);
        },
        [](std::span<const double> x) { return -x[3] + 0.0156 * x[0] + 0.15; },
        [](std::span<const double> x) { return -x[3] + 0.0156 * x[2] + 0.15; },
        [](std::span<const double> x) { return -x[3] + 1.05; },
        [](std::span<const double> x) { return -x[2] + x[1]; },
    };
    return p;
}

// Tooth counts are continuous in [12, 60] and rounded inside the objective,
// so unmodified continuous optimizers apply.
double gear_train_objective(double a, double b, double c, double d) {
    double ratio = (b * c) / (a * d);
    return sq(1.0 / 6.931 - ratio);
}

Problem gear_train() {
    Problem p;
    p.name = "GTD";
    p.dim = 4;
    p.bounds = Bounds::cube(4, 12.0, 60.0);
    p.objective = [](std::span<const double> x) {
        return gear_train_objective(std::round(x[0]), std::round(x[1]), std::round(x[2]),
                                    std::round(x[3]));
    };
    return p;
}

// x = (flange width b, section height h, web thickness tw, flange thickness tf).
Problem i_beam() {
    Problem p;
    p.name = "IBD";
    p.dim = 4;
    p.bounds = Bounds({10.0, 10.0, 0.9, 0.9}, {50.0, 80.0, 5.0, 5.0});
    p.objective = [](std::span<const double> x) {
        double b = x[0], h = x[1], tw = x[2], tf = x[3];
        double inertia =
            tw * cube(h - 2.0 * tf) / 12.0 + b * cube(tf) / 6.0 + b * tf * sq(h - tf) / 2.0;
        return 5000.0 / inertia;
    };
    p.constraints = {
        [](std::span<const double> x) {
            return 2.0 * x[0] * x[3] + x[2] * (x[1] - 2.0 * x[3]) - 300.0;
        },
        [](std::span<const double> x) {
            double b = x[0], h = x[1], tw = x[2], tf = x[3];
            double bending =
                18.0 * h * 1.0e4 /
                (tw * cube(h - 2.0 * tf) + 2.0 * b * tf * (4.0 * sq(tf) + 3.0 * h * (h - 2.0 * tf)));
            double lateral = 15.0 * b * 1.0e3 / ((h - 2.0 * tf) * cube(tw) + 2.0 * tf * cube(b));
            return bending + lateral - 56.0;
        },
    };
    return p;
}

// x = (reinforcement area As, beam width b, beam depth h).
Problem reinforced_concrete_beam() {
    Problem p;
    p.name = "RCB";
    p.dim = 3;
    p.bounds = Bounds({6.0, 28.0, 5.0}, {15.0, 40.0, 10.0});
    p.objective = [](std::span<const double> x) { return 29.4 * x[0] + 0.6 * x[1] * x[2]; };
    p.constraints = {
        [](std::span<const double> x) { return x[1] / x[2] - 4.0; },
        [](std::span<const double> x) {
            return 180.0 + 7.375 * sq(x[0]) / x[2] - x[0] * x[1];
        },
    };
    return p;
}

Problem speed_reducer() {
    Problem p;
    p.name = "SRD";
    p.dim = 7;
    p.bounds = Bounds({2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0},
                      {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5});
    p.objective = [](std::span<const double> x) {
        double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
        return 0.7854 * x1 * sq(x2) * (3.3333 * sq(x3) + 14.9334 * x3 - 43.0934) -
               1.508 * x1 * (sq(x6) + sq(x7)) + 7.4777 * (cube(x6) + cube(x7)) +
               0.7854 * (x4 * sq(x6) + x5 * sq(x7));
    };
    p.constraints = {
        [](std::span<const double> x) { return 27.0 / (x[0] * sq(x[1]) * x[2]) - 1.0; },
        [](std::span<const double> x) { return 397.5 / (x[0] * sq(x[1]) * sq(x[2])) - 1.0; },
        [](std::span<const double> x) {
            return 1.93 * cube(x[3]) / (x[1] * x[2] * sq(sq(x[5]))) - 1.0;
        },
        [](std::span<const double> x) {
            return 1.93 * cube(x[4]) / (x[1] * x[2] * sq(sq(x[6]))) - 1.0;
        },
        [](std::span<const double> x) {
            return std::sqrt(sq(745.0 * x[3] / (x[1] * x[2])) + 16.9e6) / (110.0 * cube(x[5])) -
                   1.0;
        },
        [](std::span<const double> x) {
            return std::sqrt(sq(745.0 * x[4] / (x[1] * x[2])) + 157.5e6) / (85.0 * cube(x[6])) -
                   1.0;
        },
        [](std::span<const double> x) { return x[1] * x[2] / 40.0 - 1.0; },
        [](std::span<const double> x) { return 5.0 * x[1] / x[0] - 1.0; },
        [](std::span<const double> x) { return x[0] / (12.0 * x[1]) - 1.0; },
        [](std::span<const double> x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
        [](std::span<const double> x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
    };
    return p;
}

struct EngineeringEntry {
    const char* name;
    Problem (*make)();
    std::size_t dim;
    std::size_t constraints;
};

const std::array<EngineeringEntry, 6>& engineering_table() {
    static const std::array<EngineeringEntry, 6> table = {{
        {"CBD", cantilever_beam, 5, 1},
        {"CBHD", corrugated_bulkhead, 4, 6},
        {"GTD", gear_train, 4, 0},
        {"IBD", i_beam, 4, 2},
        {"RCB", reinforced_concrete_beam, 3, 2},
        {"SRD", speed_reducer, 7, 11},
    }};
    return table;
}

}  // namespace

double penalized_fitness(double f_value, std::span<const double> violations, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("penalized_fitness: weight must be positive");
    double total = 0.0;
    for (double v : violations) total += std::max(0.0, v);
    return f_value + w * total;
}

Problem make_engineering(std::string_view name) {
    for (const auto& entry : engineering_table()) {
        if (name != entry.name) continue;
        Problem p = entry.make();
        // Audit against the documented dimension / constraint summary; a
        // mismatch means the formulation itself is wrong.
        if (p.dim != entry.dim || p.constraints.size() != entry.constraints) {
            throw std::logic_error(std::string("engineering problem ") + entry.name +
                                   " does not match its documented dimensions");
        }
        return p;
    }
    throw ConfigError("unknown engineering problem: " + std::string(name));
}

const std::vector<std::string>& engineering_catalog() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : engineering_table()) out.emplace_back(entry.name);
        return out;
    }();
    return names;
}

bool is_engineering_tag(std::string_view name) {
    for (const auto& entry : engineering_table()) {
        if (name == entry.name) return true;
    }
    return false;
}

ViolationReport violation_report(const Problem& problem, std::span<const double> x) {
    ViolationReport report;
    report.per_constraint.reserve(problem.constraints.size());
    for (const auto& g : problem.constraints) {
        double gi = g(x);
        if (std::isnan(gi)) gi = std::numeric_limits<double>::infinity();
        double v = std::max(0.0, gi);
        report.per_constraint.push_back(v);
        if (v > 0.0) report.feasible = false;
    }
    return report;
}

GearTrainOptimum gear_train_grid_minimum() {
    GearTrainOptimum best;
    best.value = std::numeric_limits<double>::infinity();
    for (int a = 12; a <= 60; ++a) {
        for (int b = 12; b <= 60; ++b) {
            for (int c = 12; c <= 60; ++c) {
                for (int d = 12; d <= 60; ++d) {
                    double v = gear_train_objective(a, b, c, d);
                    if (v < best.value) {
                        best.value = v;
                        best.teeth = {a, b, c, d};
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace zoo
