// Copyright 2026 The zenosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zenosim/plotspec.hpp"
#include "zenosim/presets.hpp"
#include "zenosim/scenario.hpp"

namespace {

// Exit codes: 0 success, 1 config error, 2 numerical failure (non-sweep run).
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;

std::string default_out_dir() {
    const char* env = std::getenv("ZENOSIM_OUT");
    return env ? env : "out";
}

void report(const zenosim::RunManifest& manifest, const std::string& out_dir) {
    std::cout << "wrote " << manifest.outputs.size() << " files to " << out_dir
              << " (config " << manifest.config_hash << ", "
              << manifest.duration_seconds << " s)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zenosim: accelerated quantum Zeno passage simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, csv_path, spec_path, figure;
    int workers = 0;

    CLI::App* run = app.add_subcommand("run", "run a JSON scenario config");
    run->add_option("--config", config_path, "config file path")->required();
    run->add_option("--out", out_dir, "output directory (default $ZENOSIM_OUT or ./out)");
    run->add_option("--workers", workers, "worker count for sweeps");

    CLI::App* fig = app.add_subcommand("figure", "run a bundled figure preset");
    fig->add_option("name", figure, "one of fig2a fig2b fig3 fig4 fig5 fig6")->required();
    fig->add_option("--out", out_dir, "output directory");
    fig->add_option("--workers", workers, "worker count");

    CLI::App* plot = app.add_subcommand("plot-spec", "derive a plot spec from a CSV");
    plot->add_option("--csv", csv_path, "input CSV")->required();
    plot->add_option("--out", spec_path, "output plot-spec path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            zenosim::ScenarioConfig cfg = zenosim::ScenarioConfig::from_json_file(config_path);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            else if (cfg.out_dir == "out") cfg.out_dir = default_out_dir();
            if (workers > 0) cfg.workers = workers;
            try {
                report(zenosim::run_scenario(cfg), cfg.out_dir);
            } catch (const zenosim::NumericalError& e) {
                std::cerr << "numerical failure: " << e.what() << "\n";
                return kNumericalError;
            }
            return kOk;
        }
        if (fig->parsed()) {
            if (!zenosim::is_figure_name(figure)) {
                std::cerr << "unknown figure '" << figure << "'\n";
                return kConfigError;
            }
            const std::string dir = out_dir.empty() ? default_out_dir() + "/" + figure : out_dir;
            try {
                report(zenosim::run_figure(figure, dir, workers > 0 ? workers : 1), dir);
            } catch (const zenosim::NumericalError& e) {
                std::cerr << "numerical failure: " << e.what() << "\n";
                return kNumericalError;
            }
            return kOk;
        }
        if (plot->parsed()) {
            zenosim::emit_plot_spec(csv_path, csv_path, spec_path);
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}
