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

#ifndef ZENOSIM_ZENO_ENGINE_HPP
#define ZENOSIM_ZENO_ENGINE_HPP

#include <vector>

#include "zenosim/operator_core.hpp"

namespace zenosim {

/// One degenerate eigenspace of the coupling Hamiltonian.
struct ZenoSubspace {
    double eigenvalue = 0.0;
    Operator projector;
    int dim = 0;
    bool is_target = false;
};

/// Grouped eigenvalues of H_I = K*H_m with per-group projectors and a
/// target-space flag. Invariants: sum P_n = I, P_n P_m = 0 (n != m),
/// sum lambda_n P_n = source.
struct ZenoDecomposition {
    Operator source;                    // H_I itself (coupling constant folded in)
    double coupling_constant = 1.0;     // K; scenarios use H_I directly (K = 1)
    std::vector<ZenoSubspace> subspaces;

    Eigen::Index dim() const { return source.dim(); }
    const ZenoSubspace* target() const;
    /// Orthogonal projector onto the union of target subspaces.
    Operator target_projector() const;
};

/// How the target subspaces are selected.
struct TargetRule {
    static TargetRule kernel();                         // |eigenvalue| <= tol
    static TargetRule explicit_indices(std::vector<int> subspace_indices);
    bool use_kernel = true;
    std::vector<int> indices;
};

enum class RoughMode { TargetBlock, AllBlocks };

/// Splits a Hermitian coupling Hamiltonian into Zeno subspaces (degenerate
/// eigenspaces) and flags the target ones.
ZenoDecomposition zeno_decompose(const Operator& h_coupling,
                                 double degeneracy_tol = 1e-8,
                                 const TargetRule& rule = TargetRule::kernel(),
                                 double coupling_constant = 1.0);

/// sum_n (K lambda_n P_n + P_n H_0 P_n): the dynamics generator when the
/// strong coupling freezes inter-subspace transitions. Block-diagonal with
/// respect to the decomposition.
Operator effective_hamiltonian(const ZenoDecomposition& decomp, const Operator& h0);

/// V = Tr(H_I^2 rho): the weighted sum of squared coupling eigenvalues, zero
/// exactly when the state lies in the kernel of H_I.
double zeno_violation(const Operator& h_coupling, const QuantumState& s);

/// Static compensation Hamiltonian making the full dynamics reproduce the
/// effective one without the weak-drive requirement.
///   TargetBlock: P_T H_0 P_T - H_0 (block reduced to the target subspace)
///   AllBlocks:   sum_n P_n H_0 P_n - H_0
Operator rough_hamiltonian(const ZenoDecomposition& decomp, const Operator& h0,
                           RoughMode mode);

/// Tr(P_n rho) for every subspace, in decomposition order.
std::vector<double> subspace_populations(const ZenoDecomposition& decomp,
                                         const QuantumState& s);

} // namespace zenosim

#endif
