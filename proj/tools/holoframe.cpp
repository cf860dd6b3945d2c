#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "holoframe/errors.hpp"
#include "holoframe/experiment.hpp"

namespace hx = holoframe::experiment;

int main(int argc, char** argv) {
    CLI::App app{"holoframe: frames and sampling for weighted spaces of entire functions"};
    app.set_version_flag("--version", std::string(hx::library_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    bool quiet = false;

    auto* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
    run->add_option("config", config_path, "Path to the experiment config")->required();
    run->add_option("--out", out_dir, "Directory for the report and tables");
    run->add_flag("--quiet", quiet, "Suppress the summary on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        const hx::ExperimentConfig cfg = hx::load_config(config_path);
        const hx::RunResult result = hx::run(cfg);
        const auto written = hx::write_outputs(result, cfg, out_dir);
        if (!quiet) {
            std::cout << hx::to_string(cfg.experiment) << ": " << result.report.at("status").get<std::string>() << '\n';
            for (const auto& p : written) std::cout << "  wrote " << p.string() << '\n';
        }
        return 0;
    } catch (const holoframe::ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
