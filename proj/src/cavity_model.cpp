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

#include "zenosim/cavity_model.hpp"

#include <cmath>

namespace zenosim {
namespace cavity {

namespace {

// 0-based indices of the basis kets.
constexpr int kFG = 0, kFE = 1, kC2 = 2, kC1 = 3, kFib = 4, kGF = 5, kEF = 6;

Vector basis_ket(int i) {
    Vector v = Vector::Zero(kDim);
    v[i] = Cx(1.0, 0.0);
    return v;
}

Matrix flip(int a, int b, double w) {
    Matrix m = Matrix::Zero(kDim, kDim);
    m(a, b) = m(b, a) = Cx(w, 0.0);
    return m;
}

} // namespace

void ModelParams::validate() const {
    if (!(g > 0.0) || !(lambda > 0.0)) {
        throw InvalidArgument("ModelParams: couplings g, lambda must be > 0");
    }
    if (omega1 < 0.0 || omega2 < 0.0) {
        throw InvalidArgument("ModelParams: Rabi couplings must be >= 0");
    }
    if (gamma_atom < 0.0 || gamma_cavity < 0.0 || gamma_fiber < 0.0) {
        throw InvalidArgument("ModelParams: decay rates must be >= 0");
    }
    if (!std::isfinite(g) || !std::isfinite(lambda) || !std::isfinite(omega1) ||
        !std::isfinite(omega2)) {
        throw InvalidArgument("ModelParams: couplings must be finite");
    }
}

double ModelParams::bell_ratio(char sign) {
    if (sign == '+') return std::sqrt(2.0) - 1.0;
    if (sign == '-') return std::sqrt(2.0) + 1.0;
    throw InvalidArgument("ModelParams::bell_ratio: sign must be '+' or '-'");
}

Hamiltonians build_hamiltonians(const ModelParams& p) {
    p.validate();
    Matrix laser = flip(kFG, kFE, p.omega2) + flip(kGF, kEF, p.omega1);
    Matrix chain = flip(kFE, kC2, p.g) + flip(kC2, kFib, p.lambda) +
                   flip(kC1, kFib, p.lambda) + flip(kC1, kEF, p.g);
    return Hamiltonians{Operator(std::move(laser), true), Operator(std::move(chain), true)};
}

DressedBasis dressed_basis(const ModelParams& p) {
    p.validate();
    const double g = p.g, l = p.lambda;
    const double big = std::sqrt(g * g + 2.0 * l * l);
    DressedBasis d;
    d.delta = l / big;
    d.omega = std::hypot(p.omega1, p.omega2);

    d.psi[0] = basis_ket(kFG);
    d.psi[2] = basis_ket(kGF);
    Vector dark = basis_ket(kFE) - (g / l) * basis_ket(kFib) + basis_ket(kEF);
    d.psi[1] = dark / dark.norm();

    // Chain eigenvectors on (phi2, phi3, phi5, phi4, phi7), eigenvalues
    // +-g and +-sqrt(g^2+2l^2).
    auto chain_vec = [&](double c2, double c3, double c5, double c4, double c7) {
        Vector v = Vector::Zero(kDim);
        v[kFE] = c2; v[kC2] = c3; v[kFib] = c5; v[kC1] = c4; v[kEF] = c7;
        return Vector(v / v.norm());
    };
    d.psi[3] = chain_vec(1.0, 1.0, 0.0, -1.0, -1.0);              // +g
    d.psi[4] = chain_vec(1.0, -1.0, 0.0, 1.0, -1.0);              // -g
    d.psi[5] = chain_vec(1.0, big / g, 2.0 * l / g, big / g, 1.0);   // +big
    d.psi[6] = chain_vec(1.0, -big / g, 2.0 * l / g, -big / g, 1.0); // -big

    const Hamiltonians h = build_hamiltonians(p);
    ZenoDecomposition raw = zeno_decompose(h.h_coupling);
    // Reorder ascending eigenvalues into the model convention:
    // (0, +g, -g, +big, -big), kernel first.
    const std::array<double, 5> wanted = {0.0, g, -g, big, -big};
    ZenoDecomposition ordered;
    ordered.source = raw.source;
    ordered.coupling_constant = raw.coupling_constant;
    for (double ev : wanted) {
        bool found = false;
        for (const auto& sub : raw.subspaces) {
            if (std::abs(sub.eigenvalue - ev) < 1e-6 * std::max(1.0, big)) {
                ordered.subspaces.push_back(sub);
                found = true;
                break;
            }
        }
        if (!found) {
            throw NumericalError("dressed_basis: expected coupling eigenvalue missing");
        }
    }
    d.zeno = std::move(ordered);
    return d;
}

double passage_time(const ModelParams& p) {
    const DressedBasis d = dressed_basis(p);
    if (d.omega <= 0.0) throw InvalidArgument("passage_time: omega1 = omega2 = 0");
    return M_PI / (d.omega * d.delta);
}

QuantumState analytic_state(const ModelParams& p, double t) {
    const DressedBasis d = dressed_basis(p);
    if (d.omega <= 0.0) throw InvalidArgument("analytic_state: omega1 = omega2 = 0");
    const double w1 = p.omega1, w2 = p.omega2, w = d.omega;
    const double th = w * d.delta * t;
    const Cx c1((w1 * w1 + w2 * w2 * std::cos(th)) / (w * w), 0.0);
    const Cx c2(0.0, -w2 * std::sin(th) / w);
    const Cx c3(w1 * w2 * (std::cos(th) - 1.0) / (w * w), 0.0);
    Vector v = c1 * d.psi[0] + c2 * d.psi[1] + c3 * d.psi[2];
    return QuantumState::pure(std::move(v), kBasisName);
}

QuantumState bell_target(char sign) {
    const double s = (sign == '+') ? 1.0 : (sign == '-') ? -1.0
                     : throw InvalidArgument("bell_target: sign must be '+' or '-'");
    Vector v = Vector::Zero(kDim);
    v[kFG] = Cx(M_SQRT1_2, 0.0);
    v[kGF] = Cx(s * M_SQRT1_2, 0.0);
    return QuantumState::pure(std::move(v), kBasisName);
}

Operator dissipator(const ModelParams& p, ChannelMapping mapping) {
    p.validate();
    const double atom = (mapping == ChannelMapping::AtomCavityFiber) ? p.gamma_atom
                                                                     : p.gamma_cavity;
    const double cav = (mapping == ChannelMapping::AtomCavityFiber) ? p.gamma_cavity
                                                                    : p.gamma_atom;
    Matrix d = Matrix::Zero(kDim, kDim);
    const Cx half(0.0, -0.5);
    d(kFE, kFE) = d(kEF, kEF) = half * atom;
    d(kC2, kC2) = d(kC1, kC1) = half * cav;
    d(kFib, kFib) = half * p.gamma_fiber;
    return Operator(std::move(d));
}

Operator uniform_dissipator(double gamma, const ModelParams& p) {
    if (gamma < 0.0) throw InvalidArgument("uniform_dissipator: negative rate");
    ModelParams q = p;
    q.gamma_atom = q.gamma_cavity = q.gamma_fiber = gamma;
    return dissipator(q);
}

Operator explicit_rough_hamiltonian(const ModelParams& p) {
    p.validate();
    const double g = p.g, l = p.lambda;
    const double d2 = l * l / (g * g + 2.0 * l * l); // delta^2
    Matrix h = Matrix::Zero(kDim, kDim);
    auto add = [&h](int a, int b, double w) {
        h(a, b) += Cx(w, 0.0);
        h(b, a) += Cx(w, 0.0);
    };
    add(kFG, kFE, p.omega2 * (d2 - 1.0));
    add(kFG, kFib, -p.omega2 * d2 * g / l);
    add(kFG, kEF, p.omega2 * d2);
    add(kFE, kGF, p.omega1 * d2);
    add(kFib, kGF, -p.omega1 * d2 * g / l);
    add(kGF, kEF, p.omega1 * (d2 - 1.0));
    return Operator(std::move(h), true);
}

ControlSet build_complete_dressed_set(const ModelParams& p, double gain,
                                      bool drive_duplicated_channel,
                                      bool with_compensation) {
    const DressedBasis d = dressed_basis(p);
    auto dyad = [&](int a, int b) {
        Matrix m = d.psi[a] * d.psi[b].adjoint();
        return Operator(Matrix(m + m.adjoint()), true);
    };
    ControlSet set;
    int id = 0;
    auto push = [&](const Operator& op, ControlLaw law, double k) {
        ControlChannel c;
        c.op = op;
        c.law = law;
        c.id = id++;
        c.gain = k;
        set.channels.push_back(std::move(c));
    };
    const Operator first = dyad(0, 3); // |psi1><psi4| + H.c.
    push(first, with_compensation ? ControlLaw::Compensation : ControlLaw::Constant, 0.0);
    push(first, ControlLaw::Proportional, drive_duplicated_channel ? gain : 0.0);
    for (int b : {4, 5, 6}) push(dyad(0, b), ControlLaw::Proportional, gain);
    for (int b : {3, 4, 5, 6}) push(dyad(1, b), ControlLaw::Proportional, gain);
    for (int b : {3, 4, 5, 6}) push(dyad(2, b), ControlLaw::Proportional, gain);
    set.validate();
    return set;
}

ControlSet build_realizable_set(const ModelParams& p, ControlLaw law,
                                double gain_or_amplitude, double u5_constant) {
    p.validate();
    if (law != ControlLaw::Proportional && law != ControlLaw::BangBang) {
        throw InvalidArgument("build_realizable_set: law must be proportional or bang-bang");
    }
    Matrix h5 = Matrix::Zero(kDim, kDim);
    h5 += basis_ket(kC2) * basis_ket(kFib).adjoint();
    h5 += basis_ket(kC1) * basis_ket(kFib).adjoint();
    h5 += h5.adjoint().eval();

    ControlSet set;
    int id = 1;
    auto push = [&](Matrix m) {
        ControlChannel c;
        c.op = Operator(std::move(m), true);
        c.law = law;
        c.id = id++;
        if (law == ControlLaw::Proportional) c.gain = gain_or_amplitude;
        else c.amplitude = gain_or_amplitude;
        set.channels.push_back(std::move(c));
    };
    push(flip(kFG, kFE, 1.0));
    push(flip(kGF, kEF, 1.0));
    push(flip(kFE, kC2, 1.0));
    push(flip(kC1, kEF, 1.0));
    ControlChannel c5;
    c5.op = Operator(std::move(h5), true);
    c5.law = ControlLaw::Constant;
    c5.id = 5;
    c5.constant_value = u5_constant;
    set.channels.push_back(std::move(c5));
    set.validate();
    return set;
}

} // namespace cavity
} // namespace zenosim
