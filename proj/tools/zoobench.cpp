#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>

#include "zoo/benchmarks.hpp"
#include "zoo/engineering.hpp"
#include "zoo/harness.hpp"

namespace {

int cmd_run(const std::string& config_path, int workers, const std::string& out_override,
            const std::string& traces_override) {
    zoo::ExperimentConfig config = zoo::load_config(config_path);
    if (!out_override.empty()) config.out_csv = out_override;
    if (!traces_override.empty()) config.trace_dir = traces_override;

    const auto rows = zoo::run_experiment(config, workers);
    std::size_t failed = 0;
    for (const auto& row : rows) {
        if (!row.error.empty()) ++failed;
    }
    std::cout << "wrote " << rows.size() << " rows to " << config.out_csv;
    if (!config.trace_dir.empty()) std::cout << ", traces in " << config.trace_dir;
    std::cout << "\n";
    if (failed > 0) {
        std::cerr << failed << " cell(s) failed; see the error column\n";
        return 2;
    }
    return 0;
}

int cmd_stats(const std::string& results_path, const std::string& reference,
              const std::string& out_prefix) {
    const zoo::ComparisonTable table = zoo::stats_report(results_path, reference, out_prefix);
    std::cout << zoo::comparison_table_text(table);
    std::cout << "wrote " << out_prefix << ".csv and " << out_prefix << ".txt\n";
    return 0;
}

int cmd_list(const std::string& what) {
    if (what == "problems") {
        for (const auto& tag : zoo::benchmark_catalog()) std::cout << tag << "\n";
        for (const auto& tag : zoo::engineering_catalog()) std::cout << tag << "\n";
        return 0;
    }
    if (what == "algorithms") {
        for (const auto& tag : zoo::algorithm_tags()) std::cout << tag << "\n";
        return 0;
    }
    std::cerr << "expected 'problems' or 'algorithms'\n";
    return 1;
}

int cmd_oracle_gtd() {
    const auto best = zoo::gear_train_grid_minimum();
    std::printf("gear train grid minimum: %.6e\n", best.value);
    std::printf("teeth: (%d, %d, %d, %d)\n", best.teeth[0], best.teeth[1], best.teeth[2],
                best.teeth[3]);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZSO benchmark harness"};
    app.require_subcommand(1);

    std::string config_path;
    int workers = 1;
    std::string out_override;
    std::string traces_override;
    auto* run = app.add_subcommand("run", "Execute an experiment matrix from a JSON config");
    run->add_option("--config", config_path, "Experiment config file")->required();
    run->add_option("--workers", workers, "Worker thread count")->check(CLI::PositiveNumber);
    run->add_option("--out", out_override, "Results CSV path (overrides the config)");
    run->add_option("--traces", traces_override, "Trace directory (overrides the config)");

    std::string results_path;
    std::string reference;
    std::string stats_prefix = "stats_report";
    auto* stats = app.add_subcommand("stats", "Summarize a results CSV against a reference");
    stats->add_option("--results", results_path, "Results CSV")->required();
    stats->add_option("--reference", reference, "Reference algorithm tag")->required();
    stats->add_option("--out", stats_prefix, "Output prefix for .csv/.txt");

    std::string what;
    auto* list = app.add_subcommand("list", "List problem or algorithm tags");
    list->add_option("what", what, "problems | algorithms")->required();

    auto* oracle = app.add_subcommand("oracle", "Run an independent oracle");
    std::string oracle_what;
    oracle->add_option("what", oracle_what, "gtd")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, workers, out_override, traces_override);
        if (stats->parsed()) return cmd_stats(results_path, reference, stats_prefix);
        if (list->parsed()) return cmd_list(what);
        if (oracle->parsed()) {
            if (oracle_what == "gtd") return cmd_oracle_gtd();
            std::cerr << "unknown oracle: " << oracle_what << "\n";
            return 1;
        }
    } catch (const zoo::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
