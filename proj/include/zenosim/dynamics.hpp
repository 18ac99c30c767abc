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

#ifndef ZENOSIM_DYNAMICS_HPP
#define ZENOSIM_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "zenosim/lyapunov.hpp"
#include "zenosim/zeno_engine.hpp"

namespace zenosim {

/// Everything the propagator needs besides the initial state: the drift and
/// coupling Hamiltonians, the recording references (target state, subspace
/// decomposition), optional feedback channels and optional decay generator.
struct ModelAssembly {
    Operator h0;          // weak drive (H_laser in the cavity model)
    Operator h_coupling;  // strong coupling H_I
    ZenoDecomposition zeno;
    QuantumState target;  // fidelity reference, pure and normalized
    std::optional<Operator> extra;      // static addition (rough compensation)
    std::optional<ControlSet> controls; // feedback channels
    std::optional<Operator> dissipator; // anti-Hermitian diagonal decay
    GuardConfig guard;
};

struct IntegratorConfig {
    double dt = 1e-3;     // units 1/g
    double t_max = 30.0;
    int record_stride = 10;
    /// Re-evaluate fields at every internal stage (preserves RK4 order for the
    /// coupled feedback system); false freezes them over each step.
    bool stage_fields = true;
    /// Feed the control law a trace-normalized copy of rho while the raw
    /// trace decays (dissipative runs).
    bool normalize_control_state = true;
    /// Compute fidelity against the trace-normalized state instead of the raw
    /// decayed one.
    bool fidelity_on_normalized = false;
};

/// Time series of everything the scenarios observe. All lists share the same
/// length; times strictly increasing.
struct Trajectory {
    std::vector<double> times;
    std::vector<QuantumState> states;
    std::vector<double> fidelity;
    std::vector<double> violation;        // V = Tr(H_I^2 rho)
    std::vector<FieldSample> fields;      // empty when no controls
    std::vector<std::vector<double>> populations;
    std::vector<double> trace;

    size_t size() const { return times.size(); }
};

/// Fixed-step RK4 propagation of
///   d rho/dt = -i [H0 + H_I (+ extra) + sum u_j(rho) H_cj, rho]        (closed)
///   d rho/dt = -i (H_nh rho - rho H_nh^dag), H_nh = H + dissipator     (decayed)
/// Fields are state feedback, re-evaluated per stage by default. rho is
/// re-Hermitized after every step. A shortened final step lands exactly on
/// t_max. Throws NumericalError on NaN or on closed-mode trace drift > 1e-6.
Trajectory integrate(const ModelAssembly& model, const QuantumState& rho0,
                     const IntegratorConfig& cfg);

/// <target|rho|target> against the raw (possibly decayed) state.
double fidelity(const QuantumState& target, const QuantumState& s);

struct FidelityPeak {
    double f_max = 0.0;
    double t_min = 0.0;
};

/// Maximum recorded fidelity and the earliest time attaining it (within 1e-9).
FidelityPeak max_fidelity_and_tmin(const Trajectory& traj);

/// Maximum over interior local maxima of the fidelity series (endpoints are
/// excluded: the initial overlap with the target is not a prepared state).
/// When no completed peak exists inside the horizon, reports the best value
/// reached after the initial descent (the recovered fidelity, never the
/// untouched starting overlap).
FidelityPeak peak_fidelity_and_tmin(const Trajectory& traj);

/// Smallest sampled t with fidelity >= threshold at every sample from t to
/// the end of the trajectory; nullopt if never satisfied.
std::optional<double> robust_threshold_time(const Trajectory& traj, double threshold);

struct ThresholdWindow {
    double t_enter = 0.0;
    double t_exit = 0.0;
    double duration() const { return t_exit - t_enter; }
};

/// Longest contiguous stretch with fidelity >= threshold.
std::optional<ThresholdWindow> longest_threshold_window(const Trajectory& traj,
                                                        double threshold);

} // namespace zenosim

#endif
