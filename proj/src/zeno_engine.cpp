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

#include "zenosim/zeno_engine.hpp"

#include <algorithm>
#include <cmath>

namespace zenosim {

const ZenoSubspace* ZenoDecomposition::target() const {
    for (const auto& sub : subspaces) {
        if (sub.is_target) return &sub;
    }
    return nullptr;
}

Operator ZenoDecomposition::target_projector() const {
    Matrix p = Matrix::Zero(dim(), dim());
    bool any = false;
    for (const auto& sub : subspaces) {
        if (sub.is_target) {
            p += sub.projector.matrix();
            any = true;
        }
    }
    if (!any) throw InvalidArgument("ZenoDecomposition: no target subspace flagged");
    return Operator(std::move(p), true);
}

TargetRule TargetRule::kernel() { return TargetRule{}; }

TargetRule TargetRule::explicit_indices(std::vector<int> subspace_indices) {
    TargetRule r;
    r.use_kernel = false;
    r.indices = std::move(subspace_indices);
    return r;
}

ZenoDecomposition zeno_decompose(const Operator& h_coupling, double degeneracy_tol,
                                 const TargetRule& rule, double coupling_constant) {
    const Spectrum spec = hermitian_eigendecomposition(h_coupling, degeneracy_tol);
    ZenoDecomposition decomp;
    decomp.source = h_coupling;
    decomp.coupling_constant = coupling_constant;
    decomp.subspaces.reserve(spec.groups.size());
    for (size_t g = 0; g < spec.groups.size(); ++g) {
        const auto& idx = spec.groups[g];
        std::vector<Vector> cols;
        double lambda = 0.0;
        cols.reserve(idx.size());
        for (int i : idx) {
            cols.push_back(spec.eigenvectors.col(i));
            lambda += spec.eigenvalues[i];
        }
        lambda /= static_cast<double>(idx.size());
        ZenoSubspace sub;
        sub.eigenvalue = lambda;
        sub.projector = projector_from_columns(cols);
        sub.dim = static_cast<int>(idx.size());
        if (rule.use_kernel) {
            sub.is_target = std::abs(lambda) <= degeneracy_tol;
        } else {
            sub.is_target = std::find(rule.indices.begin(), rule.indices.end(),
                                      static_cast<int>(g)) != rule.indices.end();
        }
        decomp.subspaces.push_back(std::move(sub));
    }
    return decomp;
}

Operator effective_hamiltonian(const ZenoDecomposition& decomp, const Operator& h0) {
    if (h0.dim() != decomp.dim()) {
        throw InvalidArgument("effective_hamiltonian: dimension mismatch");
    }
    Matrix h = Matrix::Zero(decomp.dim(), decomp.dim());
    for (const auto& sub : decomp.subspaces) {
        const Matrix& p = sub.projector.matrix();
        h += decomp.coupling_constant * sub.eigenvalue * p;
        h += p * h0.matrix() * p;
    }
    return Operator(0.5 * (h + h.adjoint().eval()), true);
}

double zeno_violation(const Operator& h_coupling, const QuantumState& s) {
    if (h_coupling.dim() != s.dim()) {
        throw InvalidArgument("zeno_violation: dimension mismatch");
    }
    return expectation(h_coupling * h_coupling, s).real();
}

Operator rough_hamiltonian(const ZenoDecomposition& decomp, const Operator& h0,
                           RoughMode mode) {
    if (h0.dim() != decomp.dim()) {
        throw InvalidArgument("rough_hamiltonian: dimension mismatch");
    }
    if (mode == RoughMode::TargetBlock) {
        const Matrix pt = decomp.target_projector().matrix();
        Matrix h = pt * h0.matrix() * pt - h0.matrix();
        return Operator(0.5 * (h + h.adjoint().eval()), true);
    }
    Matrix h = -h0.matrix();
    for (const auto& sub : decomp.subspaces) {
        const Matrix& p = sub.projector.matrix();
        h += p * h0.matrix() * p;
    }
    return Operator(0.5 * (h + h.adjoint().eval()), true);
}

std::vector<double> subspace_populations(const ZenoDecomposition& decomp,
                                         const QuantumState& s) {
    if (s.dim() != decomp.dim()) {
        throw InvalidArgument("subspace_populations: dimension mismatch");
    }
    std::vector<double> pops;
    pops.reserve(decomp.subspaces.size());
    for (const auto& sub : decomp.subspaces) {
        pops.push_back(expectation(sub.projector, s).real());
    }
    return pops;
}

} // namespace zenosim
