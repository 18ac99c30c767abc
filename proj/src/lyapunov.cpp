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

#include "zenosim/lyapunov.hpp"

#include <algorithm>
#include <cmath>

namespace zenosim {

bool ControlSet::has_compensation() const {
    for (const auto& c : channels) {
        if (c.law == ControlLaw::Compensation) return true;
    }
    return false;
}

void ControlSet::validate() const {
    int compensation_count = 0;
    for (const auto& c : channels) {
        if (!c.op.is_hermitian(1e-10)) {
            throw InvalidArgument("ControlSet: channel " + std::to_string(c.id) +
                                  " operator is not Hermitian");
        }
        switch (c.law) {
        case ControlLaw::Proportional:
            if (c.gain < 0.0) {
                throw InvalidArgument("ControlSet: negative gain on channel " +
                                      std::to_string(c.id));
            }
            break;
        case ControlLaw::BangBang:
            if (c.amplitude <= 0.0) {
                throw InvalidArgument("ControlSet: bang-bang channel " + std::to_string(c.id) +
                                      " needs amplitude > 0");
            }
            break;
        case ControlLaw::Compensation:
            ++compensation_count;
            break;
        case ControlLaw::Constant:
            break;
        }
    }
    if (compensation_count > 1) {
        throw InvalidArgument("ControlSet: more than one compensation channel");
    }
}

namespace {

// Tr(-i rho M) for Hermitian-sandwich commutators; real up to roundoff.
double minus_i_trace(const Matrix& rho, const Matrix& m) {
    Cx tr(0.0, 0.0);
    const Eigen::Index n = rho.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        tr += (rho.row(i) * m.col(i))(0, 0);
    }
    return (Cx(0.0, -1.0) * tr).real();
}

double clamp_to(double v, double bound, bool& clamped) {
    if (v > bound) { clamped = true; return bound; }
    if (v < -bound) { clamped = true; return -bound; }
    return v;
}

} // namespace

ControlEvaluator::ControlEvaluator(const Operator& h0, const Operator& h_coupling,
                                   const ControlSet& set, GuardConfig guard)
    : set_(set), guard_(guard) {
    set_.validate();
    if (h0.dim() != h_coupling.dim()) {
        throw InvalidArgument("ControlEvaluator: dimension mismatch");
    }
    const Matrix hi2 = h_coupling.matrix() * h_coupling.matrix();
    drift_comm_ = hi2 * h0.matrix() - h0.matrix() * hi2;
    channel_comms_.reserve(set_.channels.size());
    for (const auto& c : set_.channels) {
        if (c.op.dim() != h0.dim()) {
            throw InvalidArgument("ControlEvaluator: channel dimension mismatch");
        }
        channel_comms_.push_back(hi2 * c.op.matrix() - c.op.matrix() * hi2);
    }
}

double ControlEvaluator::channel_trace(const Matrix& rho, size_t j) const {
    return minus_i_trace(rho, channel_comms_.at(j));
}

double ControlEvaluator::drift_trace(const Matrix& rho) const {
    return minus_i_trace(rho, drift_comm_);
}

FieldSample ControlEvaluator::evaluate(const Matrix& rho, double time) const {
    if (!rho.allFinite()) throw NumericalError("ControlEvaluator: NaN in state");
    FieldSample out;
    out.time = time;
    out.values.resize(set_.channels.size(), 0.0);
    bool guard = false;
    for (size_t j = 0; j < set_.channels.size(); ++j) {
        const ControlChannel& c = set_.channels[j];
        double u = 0.0;
        switch (c.law) {
        case ControlLaw::Compensation: {
            const double num = drift_trace(rho);
            const double den = channel_trace(rho, j);
            if (std::abs(den) < guard_.eps) {
                u = 0.0;
                guard = true;
            } else if (guard_.reg > 0.0) {
                u = -num * den / (den * den + guard_.reg * guard_.reg);
                if (den * den < guard_.reg * guard_.reg) guard = true;
            } else {
                u = -num / den;
            }
            u = clamp_to(u, guard_.u_max, guard);
            break;
        }
        case ControlLaw::Proportional:
            u = clamp_to(-c.gain * channel_trace(rho, j), guard_.u_max, guard);
            break;
        case ControlLaw::BangBang: {
            const double t = channel_trace(rho, j);
            if (t < -guard_.deadband) u = c.amplitude;
            else if (t > guard_.deadband) u = -c.amplitude;
            else u = 0.0;
            break;
        }
        case ControlLaw::Constant:
            u = clamp_to(c.constant_value, guard_.u_max, guard);
            break;
        }
        out.values[j] = u;
    }
    out.guard_active = guard;
    out.vdot = vdot(rho, out.values);
    return out;
}

double ControlEvaluator::vdot(const Matrix& rho, const std::vector<double>& field_values) const {
    double v = drift_trace(rho);
    for (size_t j = 0; j < field_values.size() && j < channel_comms_.size(); ++j) {
        if (field_values[j] != 0.0) v += field_values[j] * channel_trace(rho, j);
    }
    return v;
}

FieldSample control_fields_proportional(const QuantumState& rho, const Operator& h0,
                                        const Operator& h_coupling, const ControlSet& set,
                                        const GuardConfig& guard) {
    ControlEvaluator eval(h0, h_coupling, set, guard);
    return eval.evaluate(rho.density_matrix());
}

FieldSample control_fields_bangbang(const QuantumState& rho, const Operator& h_coupling,
                                    const ControlSet& set, const GuardConfig& guard) {
    for (const auto& c : set.channels) {
        if (c.law == ControlLaw::Proportional || c.law == ControlLaw::Compensation) {
            throw InvalidArgument("control_fields_bangbang: set mixes in non-square-pulse laws");
        }
    }
    ControlEvaluator eval(Operator::zero(h_coupling.dim()), h_coupling, set, guard);
    return eval.evaluate(rho.density_matrix());
}

double vdot(const QuantumState& rho, const Operator& h0, const Operator& h_coupling,
            const ControlSet& set, const FieldSample& fields) {
    ControlEvaluator eval(h0, h_coupling, set);
    return eval.vdot(rho.density_matrix(), fields.values);
}

} // namespace zenosim
