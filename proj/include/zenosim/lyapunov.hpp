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

#ifndef ZENOSIM_LYAPUNOV_HPP
#define ZENOSIM_LYAPUNOV_HPP

#include <string>
#include <vector>

#include "zenosim/operator_core.hpp"

namespace zenosim {

enum class ControlLaw { Proportional, BangBang, Constant, Compensation };

/// One feedback channel: a Hermitian generator plus the law that shapes its
/// field value from the current state.
struct ControlChannel {
    Operator op;                 // H_cj, Hermitian
    ControlLaw law = ControlLaw::Proportional;
    int id = 0;                  // stable channel index used in output columns
    double gain = 0.0;           // k_j, proportional law; must be >= 0
    double amplitude = 0.0;      // K, bang-bang law; must be > 0 when used
    double constant_value = 0.0; // constant law
};

/// Ordered list of control channels; at most one compensation channel.
struct ControlSet {
    std::vector<ControlChannel> channels;
    bool has_compensation() const;
    void validate() const;       // Hermiticity, gain signs, compensation count
};

/// Numerical guards for the field laws.
///
/// The compensation field is a ratio of two traces that both vanish on the
/// target subspace, so the raw law is singular there. Both guards from the
/// contract are kept (hard cutoff `eps`, clamp `u_max`) and a softening scale
/// `reg` is applied on top: u0 = -num*den/(den^2 + reg^2). With reg = 0 the
/// law is the plain guarded ratio. deadband applies to the bang-bang sign
/// test. Values are in units of g.
struct GuardConfig {
    double eps = 1e-9;       // |denominator| below this -> u0 = 0
    double u_max = 10.0;     // clamp applied to every field value
    double reg = 1e-2;       // compensation softening scale (0 = exact ratio)
    double deadband = 1e-3;  // bang-bang: |trace| below this -> 0
};

/// Field values at one instant, plus the descent diagnostic.
struct FieldSample {
    double time = 0.0;
    std::vector<double> values;   // one per channel, channel order
    double vdot = 0.0;            // Tr(-i rho [H_I^2, H_0]) + sum u_j Tr(-i rho [H_I^2, H_cj])
    bool guard_active = false;    // a cutoff, softening or clamp shaped some value
};

/// Caches the commutators [H_I^2, H_0] and [H_I^2, H_cj] so per-step field
/// evaluation reduces to one trace per channel.
class ControlEvaluator {
public:
    ControlEvaluator(const Operator& h0, const Operator& h_coupling,
                     const ControlSet& set, GuardConfig guard = GuardConfig{});

    /// Evaluates every channel by its own law from the given density matrix.
    FieldSample evaluate(const Matrix& rho, double time = 0.0) const;

    /// Tr(-i rho [H_I^2, H_cj]) for channel j.
    double channel_trace(const Matrix& rho, size_t j) const;
    /// Tr(-i rho [H_I^2, H_0]).
    double drift_trace(const Matrix& rho) const;

    double vdot(const Matrix& rho, const std::vector<double>& field_values) const;

    const ControlSet& set() const { return set_; }
    const GuardConfig& guard() const { return guard_; }

private:
    ControlSet set_;
    GuardConfig guard_;
    Matrix drift_comm_;                 // [H_I^2, H_0]
    std::vector<Matrix> channel_comms_; // [H_I^2, H_cj]
};

/// Proportional/compensation law (state feedback):
///   u_0      = -Tr(-i rho [H_I^2, H_0]) / Tr(-i rho [H_I^2, H_c0])  (guarded)
///   u_{j!=0} = -k_j Tr(-i rho [H_I^2, H_cj])
/// Constant channels return their configured value. Everything is clamped to
/// +-guard.u_max.
FieldSample control_fields_proportional(const QuantumState& rho, const Operator& h0,
                                        const Operator& h_coupling, const ControlSet& set,
                                        const GuardConfig& guard = GuardConfig{});

/// Square-pulse law: u_j = +-K by the sign of Tr(-i rho [H_I^2, H_cj]),
/// zero inside the deadband. Constant channels unchanged.
FieldSample control_fields_bangbang(const QuantumState& rho, const Operator& h_coupling,
                                    const ControlSet& set,
                                    const GuardConfig& guard = GuardConfig{});

/// d/dt Tr(H_I^2 rho) for the given field values. Under the proportional law
/// with exact active compensation this equals -sum_{j>=1} k_j T_j^2 <= 0.
double vdot(const QuantumState& rho, const Operator& h0, const Operator& h_coupling,
            const ControlSet& set, const FieldSample& fields);

} // namespace zenosim

#endif
