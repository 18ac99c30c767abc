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

#ifndef ZENOSIM_CAVITY_MODEL_HPP
#define ZENOSIM_CAVITY_MODEL_HPP

#include <array>
#include <string>

#include "zenosim/lyapunov.hpp"
#include "zenosim/zeno_engine.hpp"

namespace zenosim {
namespace cavity {

/// Two Lambda atoms in linked cavities, single-excitation sector.
/// Ordered basis (kets |AB, c1 c2, f>):
///   phi1=|fg000>  phi2=|fe000>  phi3=|ff010>  phi4=|ff100>
///   phi5=|ff001>  phi6=|gf000>  phi7=|ef000>
inline constexpr int kDim = 7;
inline constexpr std::array<const char*, kDim> kBasisLabels = {
    "fg000", "fe000", "ff010", "ff100", "ff001", "gf000", "ef000"};
inline const std::string kBasisName = "phi";

/// All rates in units of g (g is the unit: canonical form g = 1).
struct ModelParams {
    double g = 1.0;            // atom-cavity coupling, g1 = g2 = g
    double lambda = 1.0;       // cavity-fiber coupling
    double omega1 = 0.0;       // classical Rabi coupling on atom A
    double omega2 = 0.0;       // classical Rabi coupling on atom B
    double gamma_atom = 0.0;   // atomic spontaneous emission
    double gamma_cavity = 0.0; // cavity photon loss
    double gamma_fiber = 0.0;  // fiber photon loss

    void validate() const;
    /// omega1 = (sqrt(2)-1) omega2 prepares (|fg>+|gf>)/sqrt(2);
    /// omega1 = (sqrt(2)+1) omega2 prepares (|fg>-|gf>)/sqrt(2).
    static double bell_ratio(char sign);
};

/// Which decay channel damps which basis states. Default per-channel split:
/// atom -> {phi2, phi7}, cavity -> {phi3, phi4}, fiber -> {phi5}.
/// The swapped mapping reads the first experimental rate as the cavity one.
enum class ChannelMapping { AtomCavityFiber, CavityAtomFiber };

struct Hamiltonians {
    Operator h_laser;  // classical drive: phi1<->phi2 (omega2), phi6<->phi7 (omega1)
    Operator h_coupling; // quantum coupling chain phi2-phi3-phi5-phi4-phi7 (g,l,l,g)
};

Hamiltonians build_hamiltonians(const ModelParams& p);

/// Dressed basis of the coupling chain plus the Zeno decomposition in the
/// model's conventional order: Z1 = kernel {psi1=phi1, psi2=dark, psi3=phi6},
/// then eigenvalues +g, -g, +sqrt(g^2+2l^2), -sqrt(g^2+2l^2).
struct DressedBasis {
    std::array<Vector, kDim> psi; // psi[0..6] = psi1..psi7
    double delta = 0.0;           // lambda / sqrt(g^2 + 2 lambda^2)
    double omega = 0.0;           // sqrt(omega1^2 + omega2^2)
    ZenoDecomposition zeno;       // model-ordered, kernel flagged target
};

DressedBasis dressed_basis(const ModelParams& p);

/// Closed-form state of the effective three-level passage started from phi1:
/// (1/W^2)[(W1^2 + W2^2 cos(W d t)) psi1 - i W W2 sin(W d t) psi2
///         + W1 W2 (cos(W d t) - 1) psi3],  W = sqrt(W1^2+W2^2).
QuantumState analytic_state(const ModelParams& p, double t);

/// Passage time to the maximally entangled two-atom state: pi/(Omega*delta).
double passage_time(const ModelParams& p);

/// (phi1 +- phi6)/sqrt(2) embedded in the 7-dim basis (fields in vacuum).
QuantumState bell_target(char sign);

/// Diagonal anti-Hermitian decay generator -i sum (gamma_j/2)|phi_j><phi_j|.
/// phi1 and phi6 are undamped under either mapping.
Operator dissipator(const ModelParams& p,
                    ChannelMapping mapping = ChannelMapping::AtomCavityFiber);

/// Same uniform rate on every excitation-carrying basis state
/// (phi2, phi3, phi4, phi5, phi7).
Operator uniform_dissipator(double gamma, const ModelParams& p = ModelParams{});

/// Closed-form compensation Hamiltonian of the model (coefficients in delta^2);
/// equals rough_hamiltonian(TargetBlock) on the same parameters to 1e-10.
Operator explicit_rough_hamiltonian(const ModelParams& p);

/// The thirteen dressed-state channels: index 0 the compensation channel and
/// index 1 its duplicate |psi1><psi4|+H.c. (driven proportionally), indices
/// 2..12 the remaining |psi_a><psi_b|+H.c. pairs from Z1 into the other
/// subspaces. Gains k_j on the proportional channels.
ControlSet build_complete_dressed_set(const ModelParams& p, double gain,
                                      bool drive_duplicated_channel = true,
                                      bool with_compensation = true);

/// The five bare-basis channels that correspond to adjustable couplings:
///   Hc1=|phi1><phi2|+H.c.  Hc2=|phi6><phi7|+H.c.  Hc3=|phi2><phi3|+H.c.
///   Hc4=|phi4><phi7|+H.c.  Hc5=|phi3><phi5|+|phi4><phi5|+H.c. (constant).
/// No compensation channel. `law` selects proportional (gain) or square-pulse
/// (amplitude) operation of channels 1..4.
ControlSet build_realizable_set(const ModelParams& p, ControlLaw law, double gain_or_amplitude,
                                double u5_constant = 0.0);

} // namespace cavity
} // namespace zenosim

#endif
