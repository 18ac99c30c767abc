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

#include "zenosim/operator_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace zenosim {

Operator::Operator(Matrix entries, std::optional<bool> hermitian_hint)
    : entries_(std::move(entries)), hermitian_hint_(hermitian_hint) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw InvalidArgument("Operator: entries must form a non-empty square matrix");
    }
    if (hermitian_hint_.value_or(false) && hermiticity_defect() > 1e-12) {
        throw InvalidArgument("Operator: hermitian_hint set but max |A - A^dag| = " +
                              std::to_string(hermiticity_defect()));
    }
}

Operator Operator::hermitian(Matrix entries) {
    return Operator(std::move(entries), true);
}

Operator Operator::zero(Eigen::Index dim) {
    return Operator(Matrix::Zero(dim, dim), true);
}

Operator Operator::identity(Eigen::Index dim) {
    return Operator(Matrix::Identity(dim, dim), true);
}

double Operator::hermiticity_defect() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Operator operator+(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("Operator+: dimension mismatch");
    return Operator(a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("Operator-: dimension mismatch");
    return Operator(a.entries_ - b.entries_);
}

Operator operator*(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("Operator*: dimension mismatch");
    return Operator(a.entries_ * b.entries_);
}

Operator operator*(double s, const Operator& a) { return Operator(s * a.entries_); }
Operator operator*(Cx s, const Operator& a) { return Operator(s * a.entries_); }

QuantumState QuantumState::pure(Vector amplitudes, std::string basis_label) {
    if (amplitudes.size() < 1) throw InvalidArgument("QuantumState: empty vector");
    QuantumState s;
    s.kind_ = Kind::PureVector;
    s.vec_ = std::move(amplitudes);
    s.basis_label_ = std::move(basis_label);
    return s;
}

QuantumState QuantumState::density(Matrix rho, std::string basis_label, bool decayed) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw InvalidArgument("QuantumState: density matrix must be square");
    }
    QuantumState s;
    s.kind_ = Kind::DensityMatrix;
    s.mat_ = std::move(rho);
    s.basis_label_ = std::move(basis_label);
    s.decayed_ = decayed;
    return s;
}

QuantumState QuantumState::decayed_density(Matrix rho, std::string basis_label) {
    return density(std::move(rho), std::move(basis_label), true);
}

Eigen::Index QuantumState::dim() const {
    return kind_ == Kind::PureVector ? vec_.size() : mat_.rows();
}

const Vector& QuantumState::amplitudes() const {
    if (kind_ != Kind::PureVector) {
        throw InvalidArgument("QuantumState: amplitudes() on a density matrix");
    }
    return vec_;
}

Matrix QuantumState::density_matrix() const {
    if (kind_ == Kind::DensityMatrix) return mat_;
    return vec_ * vec_.adjoint();
}

double QuantumState::trace() const {
    if (kind_ == Kind::PureVector) return vec_.squaredNorm();
    return mat_.trace().real();
}

Operator commutator(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("commutator: dimension mismatch");
    return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

namespace {

// Largest-magnitude component made real-positive; ties resolved by the first
// index within 1e-12 of the maximum.
void fix_phase(Eigen::Ref<Vector> v) {
    Eigen::Index pick = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > best + 1e-12) {
            best = m;
            pick = i;
        }
    }
    if (best == 0.0) return;
    const Cx phase = v[pick] / std::abs(v[pick]);
    v *= std::conj(phase);
}

} // namespace

Spectrum hermitian_eigendecomposition(const Operator& a, double degeneracy_tol) {
    const double defect = a.hermiticity_defect();
    if (defect > 1e-10) {
        throw InvalidArgument("hermitian_eigendecomposition: input not Hermitian, max asymmetry " +
                              std::to_string(defect));
    }
    if (degeneracy_tol <= 0.0) {
        throw InvalidArgument("hermitian_eigendecomposition: degeneracy_tol must be > 0");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (a.matrix() + a.matrix().adjoint()));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigendecomposition: solver failed");
    }
    Spectrum spec;
    spec.eigenvalues = solver.eigenvalues();
    spec.eigenvectors = solver.eigenvectors();
    for (Eigen::Index i = 0; i < spec.eigenvectors.cols(); ++i) {
        fix_phase(spec.eigenvectors.col(i));
    }
    std::vector<int> current{0};
    for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i) {
        if (spec.eigenvalues[i] - spec.eigenvalues[current.front()] <= degeneracy_tol) {
            current.push_back(static_cast<int>(i));
        } else {
            spec.groups.push_back(std::move(current));
            current = {static_cast<int>(i)};
        }
    }
    spec.groups.push_back(std::move(current));
    return spec;
}

Cx expectation(const Operator& a, const QuantumState& s) {
    if (a.dim() != s.dim()) throw InvalidArgument("expectation: dimension mismatch");
    if (s.kind() == QuantumState::Kind::PureVector) {
        const Vector& v = s.amplitudes();
        return v.dot(a.matrix() * v);   // Eigen dot conjugates the left side
    }
    return (a.matrix() * s.density_matrix()).trace();
}

Operator projector_from_columns(const std::vector<Vector>& vectors, Eigen::Index dim_if_empty) {
    if (vectors.empty()) {
        if (dim_if_empty < 1) {
            throw InvalidArgument("projector_from_columns: empty list needs a dimension");
        }
        return Operator::zero(dim_if_empty);
    }
    const Eigen::Index dim = vectors.front().size();
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) {
            throw InvalidArgument("projector_from_columns: inconsistent vector sizes");
        }
        for (size_t j = 0; j <= i; ++j) {
            const Cx overlap = vectors[j].dot(vectors[i]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > 1e-10) {
                throw InvalidArgument("projector_from_columns: vectors not orthonormal");
            }
        }
    }
    Matrix p = Matrix::Zero(dim, dim);
    for (const Vector& v : vectors) p += v * v.adjoint();
    return Operator(std::move(p), true);
}

} // namespace zenosim
