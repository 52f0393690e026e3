#include "zoo/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "zoo/baselines.hpp"
#include "zoo/benchmarks.hpp"
#include "zoo/engineering.hpp"
#include "zoo/zso.hpp"

namespace zoo {

namespace {

using nlohmann::json;

const std::vector<std::string> kAlgorithms = {"zso-cons", "zso-linear", "zso-uniform",
                                              "zso-gauss", "pso",       "de",
                                              "random"};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sanitize_csv_field(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return s;
}

/// A problem instance scheduled for execution.
struct ProblemSlot {
    std::string tag;
    int dim = 0;
    std::uint64_t fe_cap = 0;
    bool engineering = false;
};

std::uint64_t fe_cap_for(const std::string& tag, int dim, std::uint64_t fe_override) {
    if (fe_override > 0) return fe_override;
    if (is_engineering_tag(tag)) return 20000;
    return 1000ull * static_cast<std::uint64_t>(dim);
}

std::vector<ProblemSlot> resolve_problems(const ExperimentConfig& config) {
    std::vector<std::string> tags;
    if (config.suite == "cec2014") {
        for (const auto& t : benchmark_catalog()) {
            if (t.starts_with("cec2014-")) tags.push_back(t);
        }
    } else if (config.suite == "cec2022") {
        for (const auto& t : benchmark_catalog()) {
            if (t.starts_with("cec2022-")) tags.push_back(t);
        }
    } else if (config.suite == "engineering") {
        tags = engineering_catalog();
    } else if (config.suite == "custom") {
        tags = config.problems;
    } else {
        throw ConfigError("unknown suite: " + config.suite);
    }
    if (tags.empty()) throw ConfigError("config resolves to an empty problem list");

    std::vector<ProblemSlot> slots;
    for (const auto& tag : tags) {
        if (is_engineering_tag(tag)) {
            const Problem p = make_engineering(tag);
            slots.push_back({tag, static_cast<int>(p.dim),
                             fe_cap_for(tag, static_cast<int>(p.dim), config.fe_override), true});
        } else if (is_benchmark_tag(tag)) {
            for (int dim : config.dims) {
                slots.push_back({tag, dim, fe_cap_for(tag, dim, config.fe_override), false});
            }
        } else {
            throw ConfigError("unknown problem tag: " + tag);
        }
    }
    return slots;
}

Problem instantiate(const ProblemSlot& slot) {
    if (slot.engineering) return make_engineering(slot.tag);
    return make_catalog_problem(slot.tag, static_cast<std::size_t>(slot.dim));
}

RunResult run_algorithm(const std::string& algorithm, const Problem& problem, int population,
                        std::uint64_t seed, EvaluationBudget& budget, bool trace_enabled) {
    const auto n = static_cast<std::size_t>(population);
    if (algorithm == "zso-cons" || algorithm == "zso-linear" || algorithm == "zso-uniform" ||
        algorithm == "zso-gauss") {
        ZsoConfig cfg;
        cfg.population_size = n;
        cfg.seed = seed;
        cfg.trace_enabled = trace_enabled;
        if (algorithm == "zso-cons") cfg.schedule = HyperSchedule::constant();
        else if (algorithm == "zso-linear") cfg.schedule = HyperSchedule::linear();
        else if (algorithm == "zso-uniform") cfg.schedule = HyperSchedule::uniform();
        else cfg.schedule = HyperSchedule::gaussian();
        return zso_run(problem, cfg, budget);
    }
    if (algorithm == "pso") return pso_run(problem, PsoConfig{}, n, seed, budget);
    if (algorithm == "de") return de_run(problem, DeConfig{}, n, seed, budget);
    if (algorithm == "random") return random_search_run(problem, n, seed, budget);
    throw ConfigError("unknown algorithm tag: " + algorithm);
}

void write_trace_file(const std::filesystem::path& dir, const ResultRow& row,
                      const ConvergenceTrace& trace) {
    std::filesystem::create_directories(dir);
    std::ostringstream name;
    name << row.problem << "_d" << row.dim << "_" << row.algorithm << "_t" << row.trial
         << ".jsonl";
    std::ofstream out(dir / name.str());
    if (!out) throw std::runtime_error("cannot open trace file " + (dir / name.str()).string());
    for (const auto& point : trace) {
        out << "{\"fe\": " << point.fe << ", \"best\": " << fmt17(point.best) << "}\n";
    }
}

std::string csv_header() {
    return "suite,problem,dim,algorithm,trial,seed,best_fitness,best_raw_objective,feasible,"
           "fe_used,generations,wall_ms,error";
}

std::string row_to_csv(const ResultRow& r) {
    std::ostringstream line;
    line << r.suite << ',' << r.problem << ',' << r.dim << ',' << r.algorithm << ',' << r.trial
         << ',' << r.seed << ',' << fmt17(r.best_fitness) << ',' << fmt17(r.best_raw_objective)
         << ',' << (r.feasible ? "true" : "false") << ',' << r.fe_used << ',' << r.generations
         << ',' << fmt17(r.wall_ms) << ',' << sanitize_csv_field(r.error);
    return line.str();
}

/// Flushes rows to the CSV in canonical cell order as they complete, so the
/// file is a deterministic prefix of the full matrix at every moment.
class OrderedCsvWriter {
public:
    OrderedCsvWriter(const std::string& path, std::size_t total) : out_(path), slots_(total) {
        if (!out_) throw std::runtime_error("cannot open results file " + path);
        out_ << csv_header() << '\n';
        out_.flush();
    }

    void submit(std::size_t index, const ResultRow& row) {
        std::lock_guard lock(mutex_);
        slots_[index] = row;
        while (cursor_ < slots_.size() && slots_[cursor_].has_value()) {
            out_ << row_to_csv(*slots_[cursor_]) << '\n';
            out_.flush();
            ++cursor_;
        }
    }

private:
    std::ofstream out_;
    std::vector<std::optional<ResultRow>> slots_;
    std::size_t cursor_ = 0;
    std::mutex mutex_;
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

// ---- config parsing ----

[[noreturn]] void expect_type(const char* key, const char* type) {
    throw ConfigError(std::string("config key \"") + key + "\" must be " + type);
}

std::vector<std::string> string_list(const json& j, const char* key) {
    if (!j.is_array()) expect_type(key, "an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) expect_type(key, "an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

ExperimentConfig parse_config(const json& j) {
    static const std::vector<std::string> known = {"suite",      "problems", "dims",
                                                   "algorithms", "trials",   "population",
                                                   "base_seed",  "fe_override", "out", "traces"};
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }

    ExperimentConfig config;
    bool dims_given = false;

    if (j.contains("suite")) {
        const auto& s = j.at("suite");
        if (s.is_string()) {
            config.suite = s.get<std::string>();
        } else if (s.is_array()) {
            config.suite = "custom";
            config.problems = string_list(s, "suite");
        } else {
            expect_type("suite", "a suite name or an array of problem tags");
        }
    }
    if (j.contains("problems")) {
        config.problems = string_list(j.at("problems"), "problems");
        if (!config.problems.empty()) config.suite = "custom";
    }
    if (j.contains("dims")) {
        const auto& d = j.at("dims");
        if (!d.is_array()) expect_type("dims", "an array of integers");
        config.dims.clear();
        for (const auto& v : d) {
            if (!v.is_number_integer()) expect_type("dims", "an array of integers");
            config.dims.push_back(v.get<int>());
        }
        dims_given = true;
    }
    if (j.contains("algorithms")) config.algorithms = string_list(j.at("algorithms"), "algorithms");
    if (j.contains("trials")) {
        if (!j.at("trials").is_number_integer()) expect_type("trials", "an integer");
        config.trials = j.at("trials").get<int>();
    }
    if (j.contains("population")) {
        if (!j.at("population").is_number_integer()) expect_type("population", "an integer");
        config.population = j.at("population").get<int>();
    }
    if (j.contains("base_seed")) {
        if (!j.at("base_seed").is_number_integer()) expect_type("base_seed", "an integer");
        config.base_seed = j.at("base_seed").get<std::uint64_t>();
    }
    if (j.contains("fe_override")) {
        if (!j.at("fe_override").is_number_integer()) expect_type("fe_override", "an integer");
        config.fe_override = j.at("fe_override").get<std::uint64_t>();
    }
    if (j.contains("out")) {
        if (!j.at("out").is_string()) expect_type("out", "a string");
        config.out_csv = j.at("out").get<std::string>();
    }
    if (j.contains("traces")) {
        if (!j.at("traces").is_string()) expect_type("traces", "a string");
        config.trace_dir = j.at("traces").get<std::string>();
    }

    if (config.algorithms.empty()) config.algorithms = kAlgorithms;
    if (!dims_given) config.dims = config.suite == "cec2014" ? std::vector<int>{30}
                                                             : std::vector<int>{10};

    if (config.trials < 1) throw ConfigError("config key \"trials\" must be at least 1");
    if (config.population < 4) throw ConfigError("config key \"population\" must be at least 4");
    for (int dim : config.dims) {
        if (dim < 2) throw ConfigError("config key \"dims\" entries must be at least 2");
    }
    for (const auto& a : config.algorithms) {
        if (!is_algorithm_tag(a)) throw ConfigError("unknown algorithm tag: " + a);
    }
    resolve_problems(config);  // fail before any run starts on bad problem tags
    return config;
}

}  // namespace

const std::vector<std::string>& algorithm_tags() { return kAlgorithms; }

bool is_algorithm_tag(std::string_view tag) {
    return std::find(kAlgorithms.begin(), kAlgorithms.end(), tag) != kAlgorithms.end();
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    return parse_config(j);
}

ExperimentConfig load_config_from_string(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    return parse_config(j);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config, int workers) {
    const std::vector<ProblemSlot> slots = resolve_problems(config);

    struct Cell {
        std::size_t slot;
        std::size_t algorithm;
        int trial;
    };
    std::vector<Cell> cells;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
            for (int t = 0; t < config.trials; ++t) cells.push_back({s, a, t});
        }
    }

    // Problems are immutable once built and shared across worker threads.
    std::vector<Problem> problems;
    problems.reserve(slots.size());
    for (const auto& slot : slots) problems.push_back(instantiate(slot));

    OrderedCsvWriter writer(config.out_csv, cells.size());
    const bool tracing = !config.trace_dir.empty();
    std::vector<ResultRow> rows(cells.size());

    auto run_cell = [&](std::size_t index) {
        const Cell& cell = cells[index];
        const ProblemSlot& slot = slots[cell.slot];
        ResultRow row;
        row.suite = config.suite;
        row.problem = slot.tag;
        row.dim = slot.dim;
        row.algorithm = config.algorithms[cell.algorithm];
        row.trial = cell.trial;
        row.seed = config.base_seed + 1000003ull * static_cast<std::uint64_t>(index);
        const auto start = std::chrono::steady_clock::now();
        try {
            EvaluationBudget budget(slot.fe_cap);
            RunResult result = run_algorithm(row.algorithm, problems[cell.slot],
                                             config.population, row.seed, budget, true);
            row.best_fitness = result.best.fitness;
            row.best_raw_objective = result.best.objective_value;
            row.feasible = result.best.violation_sum == 0.0;
            row.fe_used = result.fe_used;
            row.generations = result.generations;
            if (tracing) write_trace_file(config.trace_dir, row, result.trace);
        } catch (const std::exception& e) {
            row.error = e.what();
            row.best_fitness = std::numeric_limits<double>::quiet_NaN();
            row.best_raw_objective = std::numeric_limits<double>::quiet_NaN();
            row.feasible = false;
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        rows[index] = row;
        writer.submit(index, row);
    };

    const int pool = std::max(1, workers);
    if (pool == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(pool));
        for (int w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    run_cell(i);
                }
            });
        }
        for (auto& t : threads) t.join();
    }
    return rows;
}

ComparisonTable stats_report(const std::string& results_csv_path,
                             const std::string& reference_algorithm,
                             const std::string& out_prefix) {
    std::ifstream in(results_csv_path);
    if (!in) throw ConfigError("cannot open results file " + results_csv_path);

    std::string line;
    if (!std::getline(in, line)) throw ConfigError("results file is empty");
    const auto header = split_csv_line(line);
    const auto expected = split_csv_line(csv_header());
    if (header != expected) throw ConfigError("unexpected results CSV header");

    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    // problem label -> algorithm -> samples
    std::vector<std::vector<SampleSet>> samples;  // indexed [algorithm][problem]

    auto algorithm_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < algorithms.size(); ++i) {
            if (algorithms[i] == name) return i;
        }
        algorithms.push_back(name);
        samples.emplace_back(problems.size());
        return algorithms.size() - 1;
    };
    auto problem_index = [&](const std::string& label) {
        for (std::size_t j = 0; j < problems.size(); ++j) {
            if (problems[j] == label) return j;
        }
        problems.push_back(label);
        for (auto& row : samples) row.emplace_back();
        return problems.size() - 1;
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 12) throw ConfigError("malformed results row: " + line);
        if (fields.size() >= 13 && !fields[12].empty()) continue;  // skip failed cells
        const std::string label = fields[1] + "-d" + fields[2];
        const std::size_t a = algorithm_index(fields[3]);
        const std::size_t p = problem_index(label);
        samples[a][p].push_back(std::stod(fields[6]));
    }

    if (algorithms.size() < 2) {
        throw ConfigError("results contain fewer than two algorithms, nothing to compare");
    }
    std::size_t reference = algorithms.size();
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (algorithms[i] == reference_algorithm) reference = i;
    }
    if (reference == algorithms.size()) {
        throw ConfigError("reference algorithm " + reference_algorithm +
                          " does not appear in the results");
    }

    ComparisonTable table = build_comparison(samples, algorithms, problems, reference);

    if (!out_prefix.empty()) {
        std::ofstream csv(out_prefix + ".csv");
        if (!csv) throw std::runtime_error("cannot write " + out_prefix + ".csv");
        csv << comparison_table_csv(table);
        std::ofstream txt(out_prefix + ".txt");
        if (!txt) throw std::runtime_error("cannot write " + out_prefix + ".txt");
        txt << comparison_table_text(table);
    }
    return table;
}

std::string comparison_table_csv(const ComparisonTable& table) {
    std::ostringstream out;
    out << "problem,algorithm,mean,stddev,raw_p,adjusted_p,mark,avg_rank,plus,approx,minus\n";
    for (std::size_t j = 0; j < table.problems.size(); ++j) {
        for (std::size_t i = 0; i < table.algorithms.size(); ++i) {
            const auto& cell = table.cells[i][j];
            out << table.problems[j] << ',' << table.algorithms[i] << ',' << fmt17(cell.mean)
                << ',' << fmt17(cell.stddev) << ','
                << (cell.raw_p ? fmt17(*cell.raw_p) : std::string()) << ','
                << (cell.adjusted_p ? fmt17(*cell.adjusted_p) : std::string()) << ','
                << (cell.mark ? mark_symbol(*cell.mark) : "") << ",,,,\n";
        }
    }
    for (std::size_t i = 0; i < table.algorithms.size(); ++i) {
        const auto& tally = table.tallies[i];
        out << "ALL," << table.algorithms[i] << ",,,,,," << fmt17(table.average_rank[i]) << ','
            << tally.plus << ',' << tally.approx << ',' << tally.minus << '\n';
    }
    return out.str();
}

std::string comparison_table_text(const ComparisonTable& table) {
    const std::size_t a = table.algorithms.size();
    const std::size_t p = table.problems.size();

    std::vector<std::vector<std::string>> grid(p + 3, std::vector<std::string>(a + 1));
    grid[0][0] = "problem";
    for (std::size_t i = 0; i < a; ++i) {
        grid[0][i + 1] = table.algorithms[i] + (i == table.reference ? " (ref)" : "");
    }
    for (std::size_t j = 0; j < p; ++j) {
        grid[j + 1][0] = table.problems[j];
        for (std::size_t i = 0; i < a; ++i) {
            const auto& cell = table.cells[i][j];
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.4e", cell.mean);
            std::string text = buf;
            if (cell.mark) text += std::string(" ") + mark_symbol(*cell.mark);
            grid[j + 1][i + 1] = text;
        }
    }
    grid[p + 1][0] = "+/≈/-";
    grid[p + 2][0] = "avg rank";
    for (std::size_t i = 0; i < a; ++i) {
        if (i == table.reference) {
            grid[p + 1][i + 1] = "-";
        } else {
            const auto& tally = table.tallies[i];
            grid[p + 1][i + 1] = std::to_string(tally.plus) + "/" + std::to_string(tally.approx) +
                                 "/" + std::to_string(tally.minus);
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", table.average_rank[i]);
        grid[p + 2][i + 1] = buf;
    }

    // Column widths in code points, so the UTF-8 approx mark aligns.
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s) {
            if ((c & 0xC0) != 0x80) ++w;
        }
        return w;
    };
    std::vector<std::size_t> width(a + 1, 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c <= a; ++c) width[c] = std::max(width[c], display_width(row[c]));
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c <= a; ++c) {
            out << grid[r][c] << std::string(width[c] - display_width(grid[r][c]) + 2, ' ');
        }
        out << '\n';
        if (r == 0 || r == p) {
            std::size_t total = 0;
            for (std::size_t c = 0; c <= a; ++c) total += width[c] + 2;
            out << std::string(total, '-') << '\n';
        }
    }
    return out.str();
}

}  // namespace zoo
