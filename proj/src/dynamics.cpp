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

#include "zenosim/dynamics.hpp"

#include <cmath>
#include <string>

namespace zenosim {

namespace {

class Propagator {
public:
    Propagator(const ModelAssembly& model, const IntegratorConfig& cfg)
        : model_(model), cfg_(cfg) {
        h_static_ = model.h0.matrix() + model.h_coupling.matrix();
        if (model.extra) h_static_ += model.extra->matrix();
        hi2_ = model.h_coupling.matrix() * model.h_coupling.matrix();
        if (model.controls) {
            eval_.emplace(model.h0, model.h_coupling, *model.controls, model.guard);
        }
        dissipative_ = model.dissipator.has_value();
        if (dissipative_) h_nh_static_ = h_static_ + model.dissipator->matrix();
    }

    FieldSample fields_at(const Matrix& rho, double t) {
        const double tr = rho.trace().real();
        if (cfg_.normalize_control_state && dissipative_ && tr > 1e-12) {
            return eval_->evaluate(Matrix(rho / tr), t);
        }
        return eval_->evaluate(rho, t);
    }

    // d rho / dt; ORs guard events of this evaluation into guard_seen.
    Matrix rhs(const Matrix& rho, double t, bool& guard_seen) {
        Matrix h = dissipative_ ? h_nh_static_ : h_static_;
        if (eval_) {
            FieldSample f = frozen_ ? *frozen_ : fields_at(rho, t);
            guard_seen = guard_seen || f.guard_active;
            const auto& chans = model_.controls->channels;
            for (size_t j = 0; j < chans.size(); ++j) {
                if (f.values[j] != 0.0) h += f.values[j] * chans[j].op.matrix();
            }
        }
        if (!dissipative_) {
            return Cx(0.0, -1.0) * (h * rho - rho * h).eval();
        }
        return Cx(0.0, -1.0) * (h * rho - rho * h.adjoint()).eval();
    }

    // One RK4 step of size h from time t.
    Matrix step(const Matrix& rho, double t, double h, bool& guard_seen) {
        if (eval_ && !cfg_.stage_fields) frozen_ = fields_at(rho, t);
        const Matrix k1 = rhs(rho, t, guard_seen);
        const Matrix k2 = rhs(rho + (0.5 * h) * k1, t + 0.5 * h, guard_seen);
        const Matrix k3 = rhs(rho + (0.5 * h) * k2, t + 0.5 * h, guard_seen);
        const Matrix k4 = rhs(rho + h * k3, t + h, guard_seen);
        frozen_.reset();
        Matrix next = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        return 0.5 * (next + next.adjoint().eval());
    }

    const Matrix& hi2() const { return hi2_; }
    bool has_controls() const { return eval_.has_value(); }
    bool dissipative() const { return dissipative_; }

private:
    const ModelAssembly& model_;
    const IntegratorConfig& cfg_;
    Matrix h_static_;
    Matrix h_nh_static_;
    Matrix hi2_;
    std::optional<ControlEvaluator> eval_;
    std::optional<FieldSample> frozen_;
    bool dissipative_ = false;
};

} // namespace

Trajectory integrate(const ModelAssembly& model, const QuantumState& rho0,
                     const IntegratorConfig& cfg) {
    if (cfg.dt <= 0.0 || cfg.t_max < cfg.dt) {
        throw InvalidArgument("integrate: need 0 < dt <= t_max");
    }
    if (cfg.record_stride < 1) throw InvalidArgument("integrate: record_stride >= 1");
    if (rho0.dim() != model.h0.dim() || model.h0.dim() != model.h_coupling.dim()) {
        throw InvalidArgument("integrate: dimension mismatch");
    }

    Propagator prop(model, cfg);
    Matrix rho = rho0.density_matrix();
    rho = 0.5 * (rho + rho.adjoint().eval());

    const long n_steps = static_cast<long>(std::ceil(cfg.t_max / cfg.dt - 1e-12));
    Trajectory traj;
    const size_t n_records = static_cast<size_t>(n_steps / cfg.record_stride) + 2;
    traj.times.reserve(n_records);
    traj.states.reserve(n_records);

    bool guard_seen = false;
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.trace.push_back(rho.trace().real());
        traj.violation.push_back((prop.hi2() * rho).trace().real());
        Matrix rho_f = rho;
        if (cfg.fidelity_on_normalized && prop.dissipative()) {
            const double tr = rho.trace().real();
            if (tr > 1e-12) rho_f /= tr;
        }
        const Vector& tgt = model.target.amplitudes();
        traj.fidelity.push_back((tgt.adjoint() * rho_f * tgt)(0, 0).real());
        QuantumState s = prop.dissipative() ? QuantumState::decayed_density(rho, rho0.basis_label())
                                            : QuantumState::density(rho, rho0.basis_label());
        traj.populations.push_back(subspace_populations(model.zeno, s));
        traj.states.push_back(std::move(s));
        if (prop.has_controls()) {
            FieldSample f = prop.fields_at(rho, t);
            f.guard_active = f.guard_active || guard_seen;
            traj.fields.push_back(std::move(f));
        }
        guard_seen = false;
    };

    record(0.0);
    for (long i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) * cfg.dt;
        const double h = std::min(cfg.dt, cfg.t_max - t); // shortened last step
        rho = prop.step(rho, t, h, guard_seen);
        if (!rho.allFinite()) {
            throw NumericalError("integrate: non-finite state at step " + std::to_string(i + 1));
        }
        const bool last = (i + 1 == n_steps);
        if (!prop.dissipative()) {
            const double tr = rho.trace().real();
            if (std::abs(tr - 1.0) > 1e-6) {
                throw NumericalError("integrate: closed-mode trace drift " +
                                     std::to_string(tr - 1.0) + " at step " +
                                     std::to_string(i + 1));
            }
        }
        if ((i + 1) % cfg.record_stride == 0 || last) {
            record(last ? cfg.t_max : static_cast<double>(i + 1) * cfg.dt);
        }
    }
    return traj;
}

double fidelity(const QuantumState& target, const QuantumState& s) {
    if (target.dim() != s.dim()) throw InvalidArgument("fidelity: dimension mismatch");
    const Vector& tgt = target.amplitudes();
    if (std::abs(tgt.norm() - 1.0) > 1e-9) {
        throw InvalidArgument("fidelity: target must be normalized");
    }
    if (s.kind() == QuantumState::Kind::PureVector) {
        return std::norm(tgt.dot(s.amplitudes()));
    }
    return (tgt.adjoint() * s.density_matrix() * tgt)(0, 0).real();
}

FidelityPeak max_fidelity_and_tmin(const Trajectory& traj) {
    if (traj.size() == 0) throw InvalidArgument("max_fidelity_and_tmin: empty trajectory");
    double best = traj.fidelity[0];
    for (double f : traj.fidelity) best = std::max(best, f);
    for (size_t i = 0; i < traj.size(); ++i) {
        if (traj.fidelity[i] >= best - 1e-9) return {best, traj.times[i]};
    }
    return {best, traj.times.back()};
}

FidelityPeak peak_fidelity_and_tmin(const Trajectory& traj) {
    if (traj.size() == 0) throw InvalidArgument("peak_fidelity_and_tmin: empty trajectory");
    const auto& f = traj.fidelity;
    const size_t n = f.size();
    double best = -1.0;
    size_t best_i = 0;
    for (size_t i = 1; i + 1 < n; ++i) {
        if (f[i] >= f[i - 1] && f[i] >= f[i + 1] && f[i] > best + 1e-12) {
            best = f[i];
            best_i = i;
        }
    }
    if (best >= 0.0) return {best, traj.times[best_i]};
    // No completed peak inside the horizon (a start-high/end-rising series):
    // report the best value reached after the initial descent bottoms out.
    size_t lo = 0;
    for (size_t i = 1; i < n; ++i) {
        if (f[i] < f[lo]) lo = i;
    }
    best = f[lo];
    best_i = lo;
    for (size_t i = lo; i < n; ++i) {
        if (f[i] > best + 1e-12) {
            best = f[i];
            best_i = i;
        }
    }
    return {best, traj.times[best_i]};
}

std::optional<double> robust_threshold_time(const Trajectory& traj, double threshold) {
    if (traj.size() == 0) throw InvalidArgument("robust_threshold_time: empty trajectory");
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw InvalidArgument("robust_threshold_time: threshold must be in (0, 1]");
    }
    std::optional<double> t;
    for (size_t i = traj.size(); i-- > 0;) {
        if (traj.fidelity[i] >= threshold) t = traj.times[i];
        else break;
    }
    return t;
}

std::optional<ThresholdWindow> longest_threshold_window(const Trajectory& traj,
                                                        double threshold) {
    std::optional<ThresholdWindow> best;
    size_t i = 0;
    const size_t n = traj.size();
    while (i < n) {
        if (traj.fidelity[i] >= threshold) {
            size_t j = i;
            while (j + 1 < n && traj.fidelity[j + 1] >= threshold) ++j;
            ThresholdWindow w{traj.times[i], traj.times[j]};
            if (!best || w.duration() > best->duration()) best = w;
            i = j + 1;
        } else {
            ++i;
        }
    }
    return best;
}

} // namespace zenosim
