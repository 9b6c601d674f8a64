#include <iostream>

#include <CLI11.hpp>

#include "loglap/report.hpp"
#include "loglap/runner.hpp"

namespace {

// numerical failures leave a machine-readable diagnostic next to the reports
void write_diagnostic(const loglap::RunOptions& options, const std::string& kind,
                      const std::string& what) {
    try {
        std::error_code ec;
        std::filesystem::create_directories(options.out_dir, ec);
        loglap::Json j;
        j["task"] = options.task;
        j["error"] = kind;
        j["message"] = what;
        loglap::write_json(options.out_dir / (options.task + "_error.json"), j);
    } catch (...) {
        // diagnostics are best effort
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loglap: logarithmic Dirichlet Laplacian experiments"};
    app.require_subcommand(1);

    loglap::RunOptions options;
    std::string config_path, out_dir = ".";
    long seed = -1;

    const char* tasks[] = {"spectrum",   "heat-trace", "threshold",      "dini",
                           "commutator", "conformal",  "verify-ahlfors"};
    for (const char* task : tasks) {
        CLI::App* sub = app.add_subcommand(task, std::string("run the ") + task + " task");
        sub->add_option("--config", config_path, "experiment configuration file")
            ->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_flag("--plot", options.plot, "emit SVG plots");
        sub->callback([task, &options]() { options.task = task; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    options.config_path = config_path;
    options.out_dir = out_dir;
    if (seed >= 0) options.seed = seed;

    try {
        return loglap::run_config(options);
    } catch (const loglap::ConfigParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        write_diagnostic(options, "parameter", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        write_diagnostic(options, "numerical", e.what());
        return 1;
    }
}
