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

#include "zenosim/presets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "zenosim/csv.hpp"
#include "zenosim/plotspec.hpp"
#include "zenosim/sweep.hpp"

namespace zenosim {

namespace fs = std::filesystem;

std::vector<double> grid(double start, double stop, double step) {
    std::vector<double> values;
    const int n = static_cast<int>(std::round((stop - start) / step));
    for (int i = 0; i <= n; ++i) values.push_back(start + step * i);
    return values;
}

namespace {

// One named sub-run of a figure; swept runs land in "<stem>.csv" summaries,
// single runs in "<stem>.csv" trajectories.
struct FigureRun {
    std::string stem;
    ScenarioConfig cfg;
};

ScenarioConfig base_config(Scenario s, double omega2) {
    ScenarioConfig cfg;
    cfg.scenario = s;
    cfg.model.omega2 = omega2;
    cfg.model.omega1 = *cfg.omega1_ratio * omega2;
    return cfg;
}

std::vector<FigureRun> figure_runs(const std::string& name) {
    std::vector<FigureRun> runs;
    auto add = [&](std::string stem, ScenarioConfig cfg) {
        runs.push_back({std::move(stem), std::move(cfg)});
    };

    if (name == "fig2a") {
        // Peak fidelity and its time for the uncontrolled passage; each point
        // runs for one protocol duration (its own passage time).
        ScenarioConfig closed = base_config(Scenario::ZenoBaseline, 1.0);
        closed.sweep = {{"omega2", grid(0.02, 1.20, 0.02)}};
        closed.horizon_rule = HorizonRule::PassagePlus2Percent;
        closed.integrator.record_stride = 20;
        closed.write_trajectories = false;
        add("sweep_closed", closed);
        for (double gamma : {0.0005, 0.001, 0.002}) {
            ScenarioConfig damped = closed;
            damped.sweep = {{"omega2", grid(0.04, 1.20, 0.04)}};
            damped.gamma_uniform = gamma;
            char stem[40];
            std::snprintf(stem, sizeof(stem), "sweep_gamma%g", gamma);
            add(stem, damped);
        }
        return runs;
    }
    if (name == "fig2b") {
        ScenarioConfig main = base_config(Scenario::ZenoBaseline, 0.5);
        main.integrator.t_max = 30.0;
        add("exact_omega0.5", main);
        ScenarioConfig slow = base_config(Scenario::ZenoBaseline, 0.05);
        slow.integrator.t_max = 120.0;
        add("exact_omega0.05", slow);
        return runs;
    }
    if (name == "fig3") {
        for (auto [stem, scenario] :
             {std::pair{"baseline", Scenario::ZenoBaseline}, {"rough", Scenario::Rough},
              {"flexible", Scenario::FlexibleComplete}}) {
            ScenarioConfig cfg = base_config(scenario, 1.0);
            cfg.integrator.t_max = 10.0;
            cfg.control.gain = 10.0;
            add(stem, cfg);
        }
        ScenarioConfig sweep = base_config(Scenario::FlexibleComplete, 1.0);
        sweep.control.gain = 10.0;
        sweep.sweep = {{"omega2", grid(0.08, 1.20, 0.04)}};
        sweep.horizon_rule = HorizonRule::TwicePassage;
        sweep.integrator.record_stride = 20;
        sweep.write_trajectories = false;
        add("sweep_flexible", sweep);
        return runs;
    }
    if (name == "fig4") {
        ScenarioConfig sweep = base_config(Scenario::DissipativeSweep, 1.0);
        sweep.control.gain = 10.0;
        sweep.integrator.t_max = 12.0;
        sweep.sweep = {{"gamma", grid(0.0, 0.05, 0.002)}};
        sweep.write_trajectories = false;
        add("sweep_gamma", sweep);

        ScenarioConfig baseline = base_config(Scenario::ZenoBaseline, 0.05);
        baseline.integrator.t_max = 120.0;
        baseline.integrator.record_stride = 20;
        baseline.sweep = {{"gamma", {0.0005, 0.001, 0.002}}};
        baseline.write_trajectories = false;
        add("sweep_baseline_gamma", baseline);

        for (double gamma : {0.01, 0.03}) {
            ScenarioConfig traj = base_config(Scenario::DissipativeSweep, 1.0);
            traj.control.gain = 10.0;
            traj.gamma_uniform = gamma;
            traj.integrator.t_max = 12.0;
            char stem[40];
            std::snprintf(stem, sizeof(stem), "traj_gamma%g", gamma);
            add(stem, traj);
        }
        return runs;
    }
    if (name == "fig5") {
        ScenarioConfig accel = base_config(Scenario::FlexibleRealizable, 0.5);
        accel.control.gain = 0.6;
        accel.integrator.t_max = 30.0;
        accel.integrator.record_stride = 20;
        accel.sweep = {{"omega2", grid(0.30, 0.80, 0.02)}};
        accel.write_trajectories = false;
        add("sweep_accel", accel);

        // Uncontrolled reference: the protocol ends at its own passage time.
        ScenarioConfig baseline = base_config(Scenario::ZenoBaseline, 0.3);
        baseline.horizon_rule = HorizonRule::PassagePlus2Percent;
        baseline.integrator.record_stride = 20;
        baseline.sweep = {{"omega2", grid(0.16, 0.44, 0.02)}};
        baseline.write_trajectories = false;
        add("sweep_baseline", baseline);

        ScenarioConfig traj = base_config(Scenario::FlexibleRealizable, 0.42);
        traj.control.gain = 0.6;
        traj.integrator.t_max = 20.0;
        add("traj_main", traj);

        for (auto [tag, rates] :
             {std::pair{"fabryperot", std::array<double, 3>{0.0035, 0.0047, 0.0002}},
              {"circuitqed", std::array<double, 3>{0.0021, 0.0004, 0.0004}}}) {
            for (auto [mtag, mapping] :
                 {std::pair{"acf", cavity::ChannelMapping::AtomCavityFiber},
                  {"caf", cavity::ChannelMapping::CavityAtomFiber}}) {
                for (double omega2 : {0.4, 0.5, 0.6}) {
                    ScenarioConfig d = base_config(Scenario::FlexibleRealizable, omega2);
                    d.control.gain = 0.6;
                    d.integrator.t_max = 20.0;
                    d.model.gamma_atom = rates[0];
                    d.model.gamma_cavity = rates[1];
                    d.model.gamma_fiber = rates[2];
                    d.mapping = mapping;
                    char stem[64];
                    std::snprintf(stem, sizeof(stem), "traj_%s_%s_omega%g", tag, mtag, omega2);
                    add(stem, d);
                }
            }
        }
        return runs;
    }
    if (name == "fig6") {
        ScenarioConfig smooth = base_config(Scenario::FlexibleRealizable, 0.5);
        smooth.control.gain = 0.6;
        smooth.integrator.t_max = 13.0;
        add("fields_smooth", smooth);
        for (double amplitude : {0.1, 0.2, 0.5, 1.0}) {
            ScenarioConfig square = base_config(Scenario::BangBang, 0.5);
            square.control.amplitude = amplitude;
            square.integrator.t_max = 13.0;
            char stem[40];
            std::snprintf(stem, sizeof(stem), "fields_square_K%g", amplitude);
            add(stem, square);
        }
        return runs;
    }
    throw InvalidArgument("unknown figure preset '" + name + "' (expected fig2a..fig6)");
}

// Figure-level plot specs beyond the per-file defaults.
std::vector<std::pair<std::string, PlotSpec>> figure_plots(const std::string& name) {
    std::vector<std::pair<std::string, PlotSpec>> plots;
    auto line = [](std::string title, std::string x, std::string xl, std::string yl) {
        PlotSpec p;
        p.title = std::move(title);
        p.x_field = std::move(x);
        p.x_label = std::move(xl);
        p.y_label = std::move(yl);
        return p;
    };
    if (name == "fig2a") {
        PlotSpec p = line("peak fidelity vs drive strength", "omega2", "Omega_2/g", "f_max");
        p.series = {{"sweep_closed.csv", "f_max", "closed"},
                    {"sweep_gamma0.0005.csv", "f_max", "gamma=0.0005"},
                    {"sweep_gamma0.001.csv", "f_max", "gamma=0.001"},
                    {"sweep_gamma0.002.csv", "f_max", "gamma=0.002"}};
        plots.emplace_back("fig2a.plotspec.json", p);
        PlotSpec q = line("time of peak fidelity", "omega2", "Omega_2/g", "g t_min");
        q.series = {{"sweep_closed.csv", "t_min", "closed"}};
        plots.emplace_back("fig2a_tmin.plotspec.json", q);
    } else if (name == "fig2b") {
        PlotSpec p = line("exact vs effective passage", "t", "gt", "fidelity");
        p.series = {{"exact_omega0.5.csv", "fidelity", "exact Omega2=0.5"},
                    {"analytic_omega0.5.csv", "fidelity", "effective Omega2=0.5"},
                    {"exact_omega0.05.csv", "fidelity", "exact Omega2=0.05"},
                    {"analytic_omega0.05.csv", "fidelity", "effective Omega2=0.05"}};
        plots.emplace_back("fig2b.plotspec.json", p);
        PlotSpec q = line("subspace populations, Omega2=0.5", "t", "gt", "population");
        for (int z = 1; z <= 5; ++z) {
            q.series.push_back({"exact_omega0.5.csv", "P_Z" + std::to_string(z),
                                "Z" + std::to_string(z)});
        }
        plots.emplace_back("fig2b_populations.plotspec.json", q);
    } else if (name == "fig3") {
        PlotSpec p = line("acceleration comparison, Omega2=g", "t", "gt", "fidelity");
        p.series = {{"baseline.csv", "fidelity", "no acceleration"},
                    {"rough.csv", "fidelity", "rough"},
                    {"flexible.csv", "fidelity", "flexible (complete set)"}};
        plots.emplace_back("fig3b.plotspec.json", p);
        PlotSpec q = line("flexible peak fidelity", "omega2", "Omega_2/g", "f_max");
        q.series = {{"sweep_flexible.csv", "f_max", "flexible"}};
        plots.emplace_back("fig3a.plotspec.json", q);
    } else if (name == "fig4") {
        PlotSpec p = line("peak fidelity vs decay rate, Omega2=g", "gamma", "gamma/g", "f_max");
        p.series = {{"sweep_gamma.csv", "f_max", "flexible (complete set)"}};
        plots.emplace_back("fig4a.plotspec.json", p);
        PlotSpec q = line("fidelity under decay", "t", "gt", "fidelity");
        q.series = {{"traj_gamma0.01.csv", "fidelity", "gamma=0.01"},
                    {"traj_gamma0.03.csv", "fidelity", "gamma=0.03"}};
        plots.emplace_back("fig4b.plotspec.json", q);
    } else if (name == "fig5") {
        PlotSpec p = line("realizable-set acceleration sweep", "omega2", "Omega_2/g", "f_max");
        p.series = {{"sweep_accel.csv", "f_max", "accelerated"},
                    {"sweep_baseline.csv", "f_max", "no acceleration"}};
        plots.emplace_back("fig5a.plotspec.json", p);
        PlotSpec q = line("fidelity, Omega2/g = 0.42", "t", "gt", "fidelity");
        q.series = {{"traj_main.csv", "fidelity", "accelerated"}};
        plots.emplace_back("fig5b.plotspec.json", q);
        PlotSpec r = line("experimental decay presets", "t", "gt", "fidelity");
        for (const char* tag : {"fabryperot", "circuitqed"}) {
            for (const char* m : {"acf", "caf"}) {
                for (const char* w : {"0.4", "0.5", "0.6"}) {
                    const std::string csv =
                        std::string("traj_") + tag + "_" + m + "_omega" + w + ".csv";
                    r.series.push_back({csv, "fidelity", std::string(tag) + "/" + m + "/" + w});
                }
            }
        }
        plots.emplace_back("fig5b_inset.plotspec.json", r);
    } else if (name == "fig6") {
        PlotSpec p = line("feedback fields, smooth law", "t", "gt", "u_j");
        for (int j = 1; j <= 5; ++j) {
            p.series.push_back({"fields_smooth.csv", "u_" + std::to_string(j),
                                "u" + std::to_string(j)});
        }
        plots.emplace_back("fig6ab.plotspec.json", p);
        PlotSpec q = line("feedback fields, square pulses (K=0.1)", "t", "gt", "u_j");
        for (int j = 1; j <= 5; ++j) {
            q.series.push_back({"fields_square_K0.1.csv", "u_" + std::to_string(j),
                                "u" + std::to_string(j)});
        }
        plots.emplace_back("fig6cd.plotspec.json", q);
        PlotSpec r = line("square-pulse fidelity by amplitude", "t", "gt", "fidelity");
        for (const char* k : {"0.1", "0.2", "0.5", "1"}) {
            r.series.push_back({std::string("fields_square_K") + k + ".csv", "fidelity",
                                std::string("K=") + k});
        }
        plots.emplace_back("fig6_fidelity.plotspec.json", r);
    }
    return plots;
}

// The effective-passage reference curve for fig2b.
std::string analytic_csv(const ScenarioConfig& cfg) {
    CsvBuilder csv({"t", "fidelity"});
    const QuantumState target = cavity::bell_target(cfg.bell_sign);
    const double dt = cfg.integrator.dt * cfg.integrator.record_stride;
    const long n = static_cast<long>(std::round(cfg.integrator.t_max / dt));
    for (long i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * dt;
        csv.add_row({t, fidelity(target, cavity::analytic_state(cfg.model, t))});
    }
    return csv.str();
}

} // namespace

std::vector<std::string> figure_names() {
    return {"fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6"};
}

bool is_figure_name(const std::string& name) {
    const auto names = figure_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

RunManifest run_figure(const std::string& name, const std::string& out_dir, int workers) {
    const auto started = std::chrono::steady_clock::now();
    const std::vector<FigureRun> runs = figure_runs(name);

    // Flatten every sub-run into a single deterministic point list so the
    // worker pool sees the whole figure at once.
    std::vector<PointSpec> all_points;
    std::vector<std::pair<size_t, size_t>> slices; // [begin, end) per run
    for (const auto& run : runs) {
        const size_t begin = all_points.size();
        for (PointSpec& p : expand_sweep(run.cfg)) {
            p.index = all_points.size();
            all_points.push_back(std::move(p));
        }
        slices.emplace_back(begin, all_points.size());
    }
    const std::vector<PointResult> results = run_points(all_points, workers);

    fs::create_directories(out_dir);
    RunManifest manifest;
    manifest.version = kVersion;
    {
        // Hash of the concatenated canonical configs.
        std::string text;
        for (const auto& run : runs) text += run.cfg.canonical_json();
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        manifest.config_hash = buf;
    }

    auto emit = [&](const std::string& file, const std::string& contents) {
        write_file((fs::path(out_dir) / file).string(), contents);
        manifest.outputs.push_back(file);
    };

    for (size_t r = 0; r < runs.size(); ++r) {
        const auto [begin, end] = slices[r];
        const bool swept = !runs[r].cfg.sweep.empty();
        if (swept) {
            std::vector<PointSpec> pts(all_points.begin() + begin, all_points.begin() + end);
            std::vector<PointResult> res(results.begin() + begin, results.begin() + end);
            emit(runs[r].stem + ".csv", summary_csv(pts, res));
        } else {
            const PointResult& res = results[begin];
            if (!res.ok) throw NumericalError("figure " + name + "/" + runs[r].stem +
                                              ": " + res.error);
            emit(runs[r].stem + ".csv", res.trajectory_csv);
        }
    }
    if (name == "fig2b") {
        for (size_t r = 0; r < runs.size(); ++r) {
            const std::string stem = runs[r].stem; // exact_omegaX -> analytic_omegaX
            emit("analytic_" + stem.substr(6) + ".csv", analytic_csv(runs[r].cfg));
        }
    }
    for (const auto& [file, spec] : figure_plots(name)) {
        emit(file, spec.to_json());
    }
    const auto ended = std::chrono::steady_clock::now();
    manifest.duration_seconds = std::chrono::duration<double>(ended - started).count();
    write_file((fs::path(out_dir) / "manifest.json").string(), manifest.to_json());
    return manifest;
}

} // namespace zenosim
