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

#ifndef ZENOSIM_SCENARIO_HPP
#define ZENOSIM_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zenosim/cavity_model.hpp"
#include "zenosim/dynamics.hpp"

namespace zenosim {

enum class Scenario {
    ZenoBaseline,       // weak drive only
    Rough,              // plus the static compensation Hamiltonian
    FlexibleComplete,   // dressed 13-channel feedback set
    FlexibleRealizable, // bare-basis 5-channel feedback set
    BangBang,           // realizable set under the square-pulse law
    DissipativeSweep,   // flexible-complete with a uniform decay rate
    Custom,             // control set picked by the control.set field
};

Scenario scenario_from_string(const std::string& s);
std::string to_string(Scenario s);

/// How each sweep point derives its horizon. Fixed uses integrator.t_max;
/// the passage rules scale with the analytic passage time of the point.
/// PassagePlus10Percent covers one passage including a late peak while
/// excluding post-passage revivals; PassagePlus2Percent ends the protocol at
/// the passage itself.
enum class HorizonRule { Fixed, TwicePassage, PassagePlus10Percent, PassagePlus2Percent };

struct SweepAxis {
    std::string parameter;       // omega2, omega1, gamma, gamma_atom, ..., gain, amplitude, u5
    std::vector<double> values;
};

struct ControlConfig {
    double gain = 10.0;          // k_j for proportional channels
    double amplitude = 0.5;      // K for square pulses
    double u5 = 0.0;             // constant fiber-channel value (realizable set)
    GuardConfig guard;
    bool drive_duplicated_channel = true;
    bool with_compensation = true;
    std::string custom_set = "none";  // custom scenario: none|complete|realizable|bangbang
};

struct ScenarioConfig {
    Scenario scenario = Scenario::Custom;
    cavity::ModelParams model;
    /// omega1 tracks omega1_ratio * omega2 unless an explicit omega1 is given
    /// (or the sweep drives omega1 directly).
    std::optional<double> omega1_ratio = cavity::ModelParams::bell_ratio('+');
    double gamma_uniform = 0.0;  // > 0 applies the same rate to every damped ket
    cavity::ChannelMapping mapping = cavity::ChannelMapping::AtomCavityFiber;
    char bell_sign = '+';
    ControlConfig control;
    IntegratorConfig integrator;
    HorizonRule horizon_rule = HorizonRule::Fixed;
    std::vector<SweepAxis> sweep;
    std::string out_dir = "out";
    int workers = 1;
    bool write_trajectories = true;

    /// Parses the JSON config text; unknown keys and malformed values are
    /// reported with the offending key path.
    static ScenarioConfig from_json_text(const std::string& text);
    static ScenarioConfig from_json_file(const std::string& path);
    std::string canonical_json() const;
};

/// One fully resolved simulation (sweep axes applied, horizon resolved).
struct PointSpec {
    size_t index = 0;
    std::vector<std::pair<std::string, double>> axis_values;
    ScenarioConfig config;  // sweep list cleared, model/controls final
};

struct PointResult {
    size_t index = 0;
    std::vector<std::pair<std::string, double>> axis_values;
    bool ok = false;
    std::string error;
    double f_max = 0.0;      // interior-peak fidelity (prepared-state reading)
    double t_min = 0.0;
    std::optional<double> robust_t95;
    std::optional<ThresholdWindow> window95;
    std::string trajectory_csv;  // empty when trajectories are not kept
};

/// Expands the Cartesian product of the sweep axes (a config without axes
/// yields exactly one point). Throws on unknown parameter names.
std::vector<PointSpec> expand_sweep(const ScenarioConfig& cfg);

/// Builds the propagation inputs for one resolved point.
ModelAssembly assemble_point(const ScenarioConfig& cfg);

/// Runs one resolved point end to end (pure function of its inputs).
PointResult run_point(const PointSpec& point);
Trajectory run_point_trajectory(const ScenarioConfig& cfg);

/// Renders a trajectory as the canonical CSV
/// (t, fidelity, V, P_Z1..P_Zn, trace, u_<id>...).
std::string trajectory_csv(const Trajectory& traj, const ScenarioConfig& cfg);

/// Renders a sweep summary CSV (axis columns, f_max, t_min, robust_t95,
/// w95_enter, w95_exit, status).
std::string summary_csv(const std::vector<PointSpec>& points,
                        const std::vector<PointResult>& results);

struct RunManifest {
    std::string config_hash;
    std::string version;
    std::vector<std::string> outputs;   // paths relative to the output dir
    double duration_seconds = 0.0;
    std::string to_json() const;
};

/// Runs a config (single point or sweep), writes trajectory/summary CSVs,
/// default plot specs and the manifest into cfg.out_dir.
RunManifest run_scenario(const ScenarioConfig& cfg);

/// FNV-1a 64-bit over the canonical config serialization.
std::string config_hash(const ScenarioConfig& cfg);

inline constexpr const char* kVersion = "0.1.0";

} // namespace zenosim

#endif
