#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "zoo/baselines.hpp"
#include "zoo/benchmarks.hpp"
#include "zoo/engineering.hpp"
#include "zoo/stats.hpp"
#include "zoo/zso.hpp"

namespace py = pybind11;
using namespace zoo;

namespace {

HyperSchedule schedule_from_name(const std::string& name) {
    if (name == "constant" || name == "cons") return HyperSchedule::constant();
    if (name == "linear") return HyperSchedule::linear();
    if (name == "uniform") return HyperSchedule::uniform();
    if (name == "gauss" || name == "gaussian") return HyperSchedule::gaussian();
    throw ConfigError("unknown schedule: " + name + " (use constant|linear|uniform|gauss)");
}

py::dict result_to_dict(const RunResult& result) {
    py::dict out;
    out["best_position"] = result.best.position;
    out["best_fitness"] = result.best.fitness;
    out["best_objective"] = result.best.objective_value;
    out["violation_sum"] = result.best.violation_sum;
    out["fe_used"] = result.fe_used;
    out["generations"] = result.generations;
    py::list trace;
    for (const auto& point : result.trace) {
        trace.append(py::make_tuple(point.fe, point.best));
    }
    out["trace"] = trace;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zoological Search Optimization library: optimizers, benchmark "
              "suites, and the nonparametric comparison engine.";

    py::register_exception<BudgetExhausted>(m, "BudgetExhausted");
    py::register_exception<ConfigError>(m, "ZooConfigError");

    py::class_<Problem>(m, "Problem")
        .def_readonly("name", &Problem::name)
        .def_readonly("dim", &Problem::dim)
        .def_readonly("penalty_weight", &Problem::penalty_weight)
        .def_property_readonly("known_bias",
                               [](const Problem& p) -> std::optional<double> { return p.known_bias; })
        .def_property_readonly("lower", [](const Problem& p) { return p.bounds.lower; })
        .def_property_readonly("upper", [](const Problem& p) { return p.bounds.upper; })
        .def_property_readonly("num_constraints",
                               [](const Problem& p) { return p.constraints.size(); })
        .def("objective", [](const Problem& p,
                             const std::vector<double>& x) { return p.objective(x); })
        .def("evaluate",
             [](const Problem& p, const std::vector<double>& x) {
                 EvaluationBudget one(1);
                 const Individual ind = evaluate(p, x, one);
                 py::dict out;
                 out["objective"] = ind.objective_value;
                 out["violation_sum"] = ind.violation_sum;
                 out["fitness"] = ind.fitness;
                 return out;
             },
             py::arg("x"),
             "Penalized evaluation of a single point: objective, violation sum, fitness.")
        .def("__repr__", [](const Problem& p) {
            return "<Problem " + p.name + " dim=" + std::to_string(p.dim) + ">";
        });

    m.def("benchmark_catalog", [] { return benchmark_catalog(); },
          "CLI-style benchmark tags (cec2014-f1..f16, cec2022-f1..f5).");
    m.def("engineering_catalog", [] { return engineering_catalog(); },
          "The six constrained engineering problem tags.");
    m.def("base_function_tags", [] { return base_function_tags(); });

    m.def("base_function",
          [](const std::string& tag, const std::vector<double>& z) {
              return base_function(base_function_from_tag(tag), z);
          },
          py::arg("tag"), py::arg("z"), "Bare base function value (no shift/rotation/bias).");

    m.def("make_benchmark",
          [](const std::string& tag, std::size_t dim, std::uint64_t seed, double bias,
             bool rotated) { return make_benchmark(tag, dim, seed, bias, rotated); },
          py::arg("tag"), py::arg("dim"), py::arg("seed"), py::arg("bias"),
          py::arg("rotated") = true,
          "Seeded shifted/rotated/biased instance of a base function on [-100, 100]^dim.");

    m.def("make_catalog_problem",
          [](const std::string& tag, std::size_t dim) { return make_catalog_problem(tag, dim); },
          py::arg("tag"), py::arg("dim"),
          "Fixed benchmark instance for a catalog tag at a dimension.");

    m.def("make_engineering",
          [](const std::string& name) { return make_engineering(name); }, py::arg("name"));

    m.def("random_rotation",
          [](std::size_t d, std::uint64_t seed) {
              const auto flat = random_rotation(d, seed);
              std::vector<std::vector<double>> rows(d, std::vector<double>(d));
              for (std::size_t i = 0; i < d; ++i) {
                  for (std::size_t j = 0; j < d; ++j) rows[i][j] = flat[i * d + j];
              }
              return rows;
          },
          py::arg("d"), py::arg("seed"), "Seeded random orthogonal matrix, row-major.");

    m.def("zso_run",
          [](const Problem& problem, std::uint64_t max_fe, const std::string& schedule,
             std::size_t population, std::uint64_t seed, bool trace) {
              ZsoConfig config;
              config.population_size = population;
              config.schedule = schedule_from_name(schedule);
              config.seed = seed;
              config.trace_enabled = trace;
              RunResult result = [&] {
                  py::gil_scoped_release unlock;
                  EvaluationBudget budget(max_fe);
                  return zso_run(problem, config, budget);
              }();
              return result_to_dict(result);
          },
          py::arg("problem"), py::arg("max_fe"), py::arg("schedule") = "gauss",
          py::arg("population") = 100, py::arg("seed") = 0, py::arg("trace") = true,
          "Run ZSO under one of the four hyperparameter schedules.");

    m.def("pso_run",
          [](const Problem& problem, std::uint64_t max_fe, std::size_t population,
             std::uint64_t seed, bool trace) {
              RunResult result = [&] {
                  py::gil_scoped_release unlock;
                  EvaluationBudget budget(max_fe);
                  return pso_run(problem, PsoConfig{}, population, seed, budget);
              }();
              if (!trace) result.trace.clear();
              return result_to_dict(result);
          },
          py::arg("problem"), py::arg("max_fe"), py::arg("population") = 100, py::arg("seed") = 0,
          py::arg("trace") = true);

    m.def("de_run",
          [](const Problem& problem, std::uint64_t max_fe, std::size_t population,
             std::uint64_t seed, bool trace) {
              RunResult result = [&] {
                  py::gil_scoped_release unlock;
                  EvaluationBudget budget(max_fe);
                  return de_run(problem, DeConfig{}, population, seed, budget);
              }();
              if (!trace) result.trace.clear();
              return result_to_dict(result);
          },
          py::arg("problem"), py::arg("max_fe"), py::arg("population") = 100, py::arg("seed") = 0,
          py::arg("trace") = true);

    m.def("random_search_run",
          [](const Problem& problem, std::uint64_t max_fe, std::size_t batch, std::uint64_t seed,
             bool trace) {
              RunResult result = [&] {
                  py::gil_scoped_release unlock;
                  EvaluationBudget budget(max_fe);
                  return random_search_run(problem, batch, seed, budget);
              }();
              if (!trace) result.trace.clear();
              return result_to_dict(result);
          },
          py::arg("problem"), py::arg("max_fe"), py::arg("batch") = 100, py::arg("seed") = 0,
          py::arg("trace") = true);

    m.def("mann_whitney_u",
          [](const SampleSet& a, const SampleSet& b) {
              const auto r = mann_whitney_u(a, b);
              return py::make_tuple(r.u, r.p);
          },
          py::arg("a"), py::arg("b"), "Two-sided Mann-Whitney U test: (U, p).");

    m.def("holm_adjust", [](const std::vector<double>& p) { return holm_adjust(p); },
          py::arg("p"));

    m.def("significance_mark",
          [](const SampleSet& reference, const SampleSet& other, double adjusted_p,
             double alpha) {
              return std::string(mark_symbol(significance_mark(reference, other, adjusted_p, alpha)));
          },
          py::arg("reference"), py::arg("other"), py::arg("adjusted_p"), py::arg("alpha") = 0.05,
          "'+' if the reference is significantly better, '-' if worse, else the approx mark.");

    m.def("average_ranks",
          [](const std::vector<std::vector<double>>& means) { return average_ranks(means); },
          py::arg("means"), "Average per-problem midranks of algorithm means.");

    m.def("gear_train_grid_minimum", [] {
        const auto best = gear_train_grid_minimum();
        return py::make_tuple(best.value, py::make_tuple(best.teeth[0], best.teeth[1],
                                                         best.teeth[2], best.teeth[3]));
    });
}
