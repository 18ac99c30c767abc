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

#include "zenosim/scenario.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "zenosim/csv.hpp"
#include "zenosim/plotspec.hpp"
#include "zenosim/sweep.hpp"

namespace zenosim {

using nlohmann::json;

Scenario scenario_from_string(const std::string& s) {
    if (s == "zeno-baseline") return Scenario::ZenoBaseline;
    if (s == "rough") return Scenario::Rough;
    if (s == "flexible-complete") return Scenario::FlexibleComplete;
    if (s == "flexible-realizable") return Scenario::FlexibleRealizable;
    if (s == "bangbang") return Scenario::BangBang;
    if (s == "dissipative-sweep") return Scenario::DissipativeSweep;
    if (s == "custom") return Scenario::Custom;
    throw InvalidArgument("config: unknown scenario '" + s + "'");
}

std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::ZenoBaseline: return "zeno-baseline";
    case Scenario::Rough: return "rough";
    case Scenario::FlexibleComplete: return "flexible-complete";
    case Scenario::FlexibleRealizable: return "flexible-realizable";
    case Scenario::BangBang: return "bangbang";
    case Scenario::DissipativeSweep: return "dissipative-sweep";
    case Scenario::Custom: return "custom";
    }
    return "custom";
}

namespace {

double get_num(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw InvalidArgument("config: key '" + key + "' must be a number");
    return j[key].get<double>();
}

HorizonRule horizon_rule_from_string(const std::string& s) {
    if (s == "fixed") return HorizonRule::Fixed;
    if (s == "2ts") return HorizonRule::TwicePassage;
    if (s == "1.1ts") return HorizonRule::PassagePlus10Percent;
    if (s == "1.02ts") return HorizonRule::PassagePlus2Percent;
    throw InvalidArgument("config: integrator.t_max_rule must be fixed|2ts|1.1ts|1.02ts");
}

std::string to_string(HorizonRule r) {
    switch (r) {
    case HorizonRule::Fixed: return "fixed";
    case HorizonRule::TwicePassage: return "2ts";
    case HorizonRule::PassagePlus10Percent: return "1.1ts";
    case HorizonRule::PassagePlus2Percent: return "1.02ts";
    }
    return "fixed";
}

} // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("config: JSON parse error: ") + e.what());
    }
    ScenarioConfig cfg;
    if (!j.contains("scenario") || !j["scenario"].is_string()) {
        throw InvalidArgument("config: missing string key 'scenario'");
    }
    cfg.scenario = scenario_from_string(j["scenario"].get<std::string>());

    const json model = j.value("model", json::object());
    cfg.model.g = get_num(model, "g", 1.0);
    cfg.model.lambda = get_num(model, "lambda", 1.0);
    cfg.model.omega2 = get_num(model, "omega2", 1.0);
    if (model.contains("omega1")) {
        cfg.model.omega1 = get_num(model, "omega1", 0.0);
        cfg.omega1_ratio.reset();
    } else {
        cfg.omega1_ratio = get_num(model, "omega1_ratio", cavity::ModelParams::bell_ratio('+'));
        cfg.model.omega1 = *cfg.omega1_ratio * cfg.model.omega2;
    }
    cfg.model.gamma_atom = get_num(model, "gamma_atom", 0.0);
    cfg.model.gamma_cavity = get_num(model, "gamma_cavity", 0.0);
    cfg.model.gamma_fiber = get_num(model, "gamma_fiber", 0.0);
    cfg.gamma_uniform = get_num(model, "gamma", 0.0);
    const std::string mapping = model.value("channel_mapping", "atom-cavity-fiber");
    if (mapping == "atom-cavity-fiber") {
        cfg.mapping = cavity::ChannelMapping::AtomCavityFiber;
    } else if (mapping == "cavity-atom-fiber") {
        cfg.mapping = cavity::ChannelMapping::CavityAtomFiber;
    } else {
        throw InvalidArgument("config: model.channel_mapping must be "
                              "atom-cavity-fiber|cavity-atom-fiber");
    }
    const std::string sign = model.value("bell_sign", "+");
    if (sign != "+" && sign != "-") throw InvalidArgument("config: model.bell_sign must be + or -");
    cfg.bell_sign = sign[0];

    const json control = j.value("control", json::object());
    cfg.control.gain = get_num(control, "gain", 10.0);
    cfg.control.amplitude = get_num(control, "amplitude", 0.5);
    cfg.control.u5 = get_num(control, "u5", 0.0);
    cfg.control.drive_duplicated_channel = control.value("drive_duplicated_channel", true);
    cfg.control.with_compensation = control.value("with_compensation", true);
    cfg.control.custom_set = control.value("set", "none");
    const json guard = control.value("guard", json::object());
    cfg.control.guard.eps = get_num(guard, "eps", cfg.control.guard.eps);
    cfg.control.guard.u_max = get_num(guard, "u_max", cfg.control.guard.u_max);
    cfg.control.guard.reg = get_num(guard, "reg", cfg.control.guard.reg);
    cfg.control.guard.deadband = get_num(guard, "deadband", cfg.control.guard.deadband);

    const json integ = j.value("integrator", json::object());
    cfg.integrator.dt = get_num(integ, "dt", 1e-3);
    cfg.integrator.t_max = get_num(integ, "t_max", 30.0);
    cfg.integrator.record_stride = static_cast<int>(get_num(integ, "record_stride", 10));
    cfg.integrator.stage_fields = integ.value("stage_fields", true);
    cfg.integrator.normalize_control_state = integ.value("normalize_control_state", true);
    cfg.integrator.fidelity_on_normalized = integ.value("fidelity_on_normalized", false);
    cfg.horizon_rule = horizon_rule_from_string(integ.value("t_max_rule", "fixed"));

    if (j.contains("sweep")) {
        if (!j["sweep"].is_array()) throw InvalidArgument("config: 'sweep' must be an array");
        for (const auto& axis : j["sweep"]) {
            SweepAxis a;
            if (!axis.contains("parameter") || !axis["parameter"].is_string()) {
                throw InvalidArgument("config: sweep axis needs a string 'parameter'");
            }
            a.parameter = axis["parameter"].get<std::string>();
            if (!axis.contains("values") || !axis["values"].is_array() ||
                axis["values"].empty()) {
                throw InvalidArgument("config: sweep axis '" + a.parameter +
                                      "' needs a non-empty 'values' array");
            }
            for (const auto& v : axis["values"]) {
                if (!v.is_number()) {
                    throw InvalidArgument("config: sweep values for '" + a.parameter +
                                          "' must be numbers");
                }
                a.values.push_back(v.get<double>());
            }
            cfg.sweep.push_back(std::move(a));
        }
    }

    const json output = j.value("output", json::object());
    cfg.out_dir = output.value("dir", std::string("out"));
    cfg.write_trajectories = output.value("write_trajectories", true);
    cfg.workers = static_cast<int>(get_num(j, "workers", 1));
    if (cfg.workers < 1) throw InvalidArgument("config: workers must be >= 1");
    return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

std::string ScenarioConfig::canonical_json() const {
    json j;
    j["scenario"] = to_string(scenario);
    j["model"] = {{"g", model.g},
                  {"lambda", model.lambda},
                  {"omega1", model.omega1},
                  {"omega2", model.omega2},
                  {"gamma_atom", model.gamma_atom},
                  {"gamma_cavity", model.gamma_cavity},
                  {"gamma_fiber", model.gamma_fiber},
                  {"gamma", gamma_uniform},
                  {"channel_mapping", mapping == cavity::ChannelMapping::AtomCavityFiber
                                          ? "atom-cavity-fiber"
                                          : "cavity-atom-fiber"},
                  {"bell_sign", std::string(1, bell_sign)}};
    if (omega1_ratio) j["model"]["omega1_ratio"] = *omega1_ratio;
    j["control"] = {{"gain", control.gain},
                    {"amplitude", control.amplitude},
                    {"u5", control.u5},
                    {"drive_duplicated_channel", control.drive_duplicated_channel},
                    {"with_compensation", control.with_compensation},
                    {"set", control.custom_set},
                    {"guard",
                     {{"eps", control.guard.eps},
                      {"u_max", control.guard.u_max},
                      {"reg", control.guard.reg},
                      {"deadband", control.guard.deadband}}}};
    j["integrator"] = {{"dt", integrator.dt},
                       {"t_max", integrator.t_max},
                       {"record_stride", integrator.record_stride},
                       {"stage_fields", integrator.stage_fields},
                       {"normalize_control_state", integrator.normalize_control_state},
                       {"fidelity_on_normalized", integrator.fidelity_on_normalized},
                       {"t_max_rule", to_string(horizon_rule)}};
    j["sweep"] = json::array();
    for (const auto& a : sweep) {
        j["sweep"].push_back({{"parameter", a.parameter}, {"values", a.values}});
    }
    j["output"] = {{"dir", out_dir}, {"write_trajectories", write_trajectories}};
    j["workers"] = workers;
    return j.dump();
}

namespace {

void apply_axis(ScenarioConfig& cfg, const std::string& name, double value,
                bool& omega1_pinned) {
    if (name == "omega2") cfg.model.omega2 = value;
    else if (name == "omega1") { cfg.model.omega1 = value; omega1_pinned = true; }
    else if (name == "gamma") cfg.gamma_uniform = value;
    else if (name == "gamma_atom") cfg.model.gamma_atom = value;
    else if (name == "gamma_cavity") cfg.model.gamma_cavity = value;
    else if (name == "gamma_fiber") cfg.model.gamma_fiber = value;
    else if (name == "gain") cfg.control.gain = value;
    else if (name == "amplitude") cfg.control.amplitude = value;
    else if (name == "u5") cfg.control.u5 = value;
    else if (name == "t_max") cfg.integrator.t_max = value;
    else throw InvalidArgument("sweep: unknown parameter '" + name + "'");
}

} // namespace

std::vector<PointSpec> expand_sweep(const ScenarioConfig& cfg) {
    std::vector<std::vector<double>> grids;
    size_t total = 1;
    for (const auto& axis : cfg.sweep) {
        grids.push_back(axis.values);
        total *= axis.values.size();
    }
    std::vector<PointSpec> points;
    points.reserve(total);
    for (size_t n = 0; n < total; ++n) {
        PointSpec p;
        p.index = n;
        p.config = cfg;
        p.config.sweep.clear();
        p.config.workers = 1;
        bool omega1_pinned = false;
        size_t rest = n;
        // Last axis varies fastest.
        std::vector<double> chosen(cfg.sweep.size());
        for (size_t a = cfg.sweep.size(); a-- > 0;) {
            const size_t k = rest % grids[a].size();
            rest /= grids[a].size();
            chosen[a] = grids[a][k];
        }
        for (size_t a = 0; a < cfg.sweep.size(); ++a) {
            apply_axis(p.config, cfg.sweep[a].parameter, chosen[a], omega1_pinned);
            p.axis_values.emplace_back(cfg.sweep[a].parameter, chosen[a]);
        }
        if (p.config.omega1_ratio && !omega1_pinned) {
            p.config.model.omega1 = *p.config.omega1_ratio * p.config.model.omega2;
        }
        if (p.config.horizon_rule != HorizonRule::Fixed) {
            const double ts = cavity::passage_time(p.config.model);
            double factor = 1.02;
            if (p.config.horizon_rule == HorizonRule::TwicePassage) factor = 2.0;
            if (p.config.horizon_rule == HorizonRule::PassagePlus10Percent) factor = 1.1;
            p.config.integrator.t_max = factor * ts;
            p.config.horizon_rule = HorizonRule::Fixed;
        }
        points.push_back(std::move(p));
    }
    return points;
}

ModelAssembly assemble_point(const ScenarioConfig& cfg) {
    cfg.model.validate();
    const cavity::Hamiltonians h = cavity::build_hamiltonians(cfg.model);
    const cavity::DressedBasis dressed = cavity::dressed_basis(cfg.model);

    ModelAssembly m;
    m.h0 = h.h_laser;
    m.h_coupling = h.h_coupling;
    m.zeno = dressed.zeno;
    m.target = cavity::bell_target(cfg.bell_sign);
    m.guard = cfg.control.guard;

    auto controls_for = [&](const std::string& kind) -> std::optional<ControlSet> {
        if (kind == "none") return std::nullopt;
        if (kind == "complete") {
            return cavity::build_complete_dressed_set(cfg.model, cfg.control.gain,
                                                      cfg.control.drive_duplicated_channel,
                                                      cfg.control.with_compensation);
        }
        if (kind == "realizable") {
            return cavity::build_realizable_set(cfg.model, ControlLaw::Proportional,
                                                cfg.control.gain, cfg.control.u5);
        }
        if (kind == "bangbang") {
            return cavity::build_realizable_set(cfg.model, ControlLaw::BangBang,
                                                cfg.control.amplitude, cfg.control.u5);
        }
        throw InvalidArgument("config: control.set must be none|complete|realizable|bangbang");
    };

    switch (cfg.scenario) {
    case Scenario::ZenoBaseline:
        break;
    case Scenario::Rough:
        m.extra = cavity::explicit_rough_hamiltonian(cfg.model);
        break;
    case Scenario::FlexibleComplete:
    case Scenario::DissipativeSweep:
        m.controls = controls_for("complete");
        break;
    case Scenario::FlexibleRealizable:
        m.controls = controls_for("realizable");
        break;
    case Scenario::BangBang:
        m.controls = controls_for("bangbang");
        break;
    case Scenario::Custom:
        m.controls = controls_for(cfg.control.custom_set);
        break;
    }

    const bool per_channel = cfg.model.gamma_atom > 0.0 || cfg.model.gamma_cavity > 0.0 ||
                             cfg.model.gamma_fiber > 0.0;
    if (cfg.gamma_uniform > 0.0) {
        m.dissipator = cavity::uniform_dissipator(cfg.gamma_uniform, cfg.model);
    } else if (per_channel) {
        m.dissipator = cavity::dissipator(cfg.model, cfg.mapping);
    }
    return m;
}

Trajectory run_point_trajectory(const ScenarioConfig& cfg) {
    const ModelAssembly m = assemble_point(cfg);
    Vector v0 = Vector::Zero(cavity::kDim);
    v0[0] = Cx(1.0, 0.0);   // |fg000>
    return integrate(m, QuantumState::pure(std::move(v0), cavity::kBasisName), cfg.integrator);
}

std::string trajectory_csv(const Trajectory& traj, const ScenarioConfig& cfg) {
    std::vector<std::string> header = {"t", "fidelity", "V"};
    const size_t n_sub = traj.populations.empty() ? 0 : traj.populations.front().size();
    for (size_t i = 0; i < n_sub; ++i) header.push_back("P_Z" + std::to_string(i + 1));
    header.push_back("trace");
    std::vector<int> channel_ids;
    if (!traj.fields.empty()) {
        const ModelAssembly m = assemble_point(cfg);
        for (const auto& c : m.controls->channels) channel_ids.push_back(c.id);
        for (int id : channel_ids) header.push_back("u_" + std::to_string(id));
    }
    CsvBuilder csv(std::move(header));
    std::vector<double> row;
    for (size_t i = 0; i < traj.size(); ++i) {
        row.clear();
        row.push_back(traj.times[i]);
        row.push_back(traj.fidelity[i]);
        row.push_back(traj.violation[i]);
        for (double p : traj.populations[i]) row.push_back(p);
        row.push_back(traj.trace[i]);
        if (!traj.fields.empty()) {
            for (double u : traj.fields[i].values) row.push_back(u);
        }
        csv.add_row(row);
    }
    return csv.str();
}

PointResult run_point(const PointSpec& point) {
    PointResult r;
    r.index = point.index;
    r.axis_values = point.axis_values;
    try {
        const Trajectory traj = run_point_trajectory(point.config);
        const FidelityPeak peak = peak_fidelity_and_tmin(traj);
        r.f_max = peak.f_max;
        r.t_min = peak.t_min;
        r.robust_t95 = robust_threshold_time(traj, 0.95);
        r.window95 = longest_threshold_window(traj, 0.95);
        if (point.config.write_trajectories) {
            r.trajectory_csv = trajectory_csv(traj, point.config);
        }
        r.ok = true;
    } catch (const std::exception& e) {
        r.ok = false;
        r.error = e.what();
    }
    return r;
}

std::string summary_csv(const std::vector<PointSpec>& points,
                        const std::vector<PointResult>& results) {
    std::vector<std::string> header;
    for (const auto& [name, _] : points.front().axis_values) header.push_back(name);
    for (const char* c : {"f_max", "t_min", "robust_t95", "w95_enter", "w95_exit"}) {
        header.push_back(c);
    }
    header.push_back("status");
    CsvBuilder csv(std::move(header));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (size_t i = 0; i < results.size(); ++i) {
        const PointResult& r = results[i];
        std::vector<double> row;
        for (const auto& [_, v] : r.axis_values) row.push_back(v);
        row.push_back(r.ok ? r.f_max : nan);
        row.push_back(r.ok ? r.t_min : nan);
        row.push_back(r.robust_t95 ? *r.robust_t95 : nan);
        row.push_back(r.window95 ? r.window95->t_enter : nan);
        row.push_back(r.window95 ? r.window95->t_exit : nan);
        csv.add_row(row, {r.ok ? "ok" : ("error:" + r.error)});
    }
    return csv.str();
}

std::string RunManifest::to_json() const {
    json j;
    j["config_hash"] = config_hash;
    j["version"] = version;
    j["outputs"] = outputs;
    j["duration_seconds"] = duration_seconds;
    return j.dump(2) + "\n";
}

std::string config_hash(const ScenarioConfig& cfg) {
    const std::string text = cfg.canonical_json();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

RunManifest run_scenario(const ScenarioConfig& cfg) {
    namespace fs = std::filesystem;
    const auto started = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out_dir);

    const std::vector<PointSpec> points = expand_sweep(cfg);
    const std::vector<PointResult> results = run_points(points, cfg.workers);

    RunManifest manifest;
    manifest.config_hash = config_hash(cfg);
    manifest.version = kVersion;

    auto emit = [&](const std::string& name, const std::string& contents) {
        write_file((fs::path(cfg.out_dir) / name).string(), contents);
        manifest.outputs.push_back(name);
    };

    const bool swept = !cfg.sweep.empty();
    if (swept) {
        emit("summary.csv", summary_csv(points, results));
        emit_plot_spec((fs::path(cfg.out_dir) / "summary.csv").string(), "summary.csv",
                       (fs::path(cfg.out_dir) / "summary.plotspec.json").string());
        manifest.outputs.push_back("summary.plotspec.json");
    } else if (!results.front().ok) {
        // A single diverging run is a hard failure; sweeps record it per point.
        throw NumericalError("run_scenario: " + results.front().error);
    }
    if (cfg.write_trajectories) {
        char name[48];
        for (const auto& r : results) {
            if (!r.ok || r.trajectory_csv.empty()) continue;
            if (swept) std::snprintf(name, sizeof(name), "point_%03zu.csv", r.index);
            else std::snprintf(name, sizeof(name), "trajectory.csv");
            emit(name, r.trajectory_csv);
        }
        if (!swept) {
            emit_plot_spec((fs::path(cfg.out_dir) / "trajectory.csv").string(),
                           "trajectory.csv",
                           (fs::path(cfg.out_dir) / "trajectory.plotspec.json").string());
            manifest.outputs.push_back("trajectory.plotspec.json");
        }
    }
    const auto ended = std::chrono::steady_clock::now();
    manifest.duration_seconds = std::chrono::duration<double>(ended - started).count();
    write_file((fs::path(cfg.out_dir) / "manifest.json").string(), manifest.to_json());
    return manifest;
}

} // namespace zenosim
