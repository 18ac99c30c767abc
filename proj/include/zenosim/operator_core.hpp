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

#ifndef ZENOSIM_OPERATOR_CORE_HPP
#define ZENOSIM_OPERATOR_CORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "zenosim/types.hpp"

namespace zenosim {

/// Dense complex operator on a small Hilbert space. Immutable value type;
/// all couplings are dimensionless (expressed in units of the atom-cavity
/// coupling g).
class Operator {
public:
    Operator() = default;
    explicit Operator(Matrix entries, std::optional<bool> hermitian_hint = std::nullopt);

    /// Builds an operator asserted Hermitian; throws if max |A - A^dag| > 1e-12.
    static Operator hermitian(Matrix entries);
    static Operator zero(Eigen::Index dim);
    static Operator identity(Eigen::Index dim);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    std::optional<bool> hermitian_hint() const { return hermitian_hint_; }

    double hermiticity_defect() const;          // max |A - A^dag| entrywise
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    Operator adjoint() const { return Operator(entries_.adjoint()); }

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(double s, const Operator& a);
    friend Operator operator*(Cx s, const Operator& a);

private:
    Matrix entries_;
    std::optional<bool> hermitian_hint_;
};

/// Pure state vector or density matrix over an explicit ordered basis.
class QuantumState {
public:
    enum class Kind { PureVector, DensityMatrix };

    /// Trivial one-level state; placeholder until assigned.
    QuantumState() : vec_(Vector::Ones(1)) {}

    static QuantumState pure(Vector amplitudes, std::string basis_label = "phi");
    static QuantumState density(Matrix rho, std::string basis_label = "phi",
                                bool decayed = false);
    /// Marks a state whose norm/trace is expected below one (non-Hermitian
    /// evolution); relaxes the normalization invariant.
    static QuantumState decayed_density(Matrix rho, std::string basis_label = "phi");

    Kind kind() const { return kind_; }
    Eigen::Index dim() const;
    bool decayed() const { return decayed_; }
    const std::string& basis_label() const { return basis_label_; }

    const Vector& amplitudes() const;           // pure only
    Matrix density_matrix() const;              // materializes |psi><psi| if pure
    double trace() const;

private:
    Kind kind_ = Kind::PureVector;
    Vector vec_;
    Matrix mat_;
    std::string basis_label_;
    bool decayed_ = false;
};

/// Eigenvalues (ascending), orthonormal eigenvectors and a degeneracy
/// partition of a Hermitian operator.
struct Spectrum {
    RealVector eigenvalues;                 // ascending
    Matrix eigenvectors;                    // columns, orthonormal
    std::vector<std::vector<int>> groups;   // indices partitioned by degeneracy
};

/// AB - BA. Anti-Hermitian (to 1e-12) when both inputs are Hermitian.
Operator commutator(const Operator& a, const Operator& b);

/// Full Hermitian eigendecomposition with degeneracy grouping. The phase of
/// each eigenvector is fixed by making its largest-magnitude component
/// real-positive, so dressed states are reproducible across runs.
Spectrum hermitian_eigendecomposition(const Operator& a, double degeneracy_tol = 1e-8);

/// <psi|A|psi> for pure states, Tr(A rho) for density matrices.
Cx expectation(const Operator& a, const QuantumState& s);

/// P = sum_i v_i v_i^dag for orthonormal columns; P^2 = P = P^dag to 1e-10.
/// An empty list yields the zero operator of the given dimension.
Operator projector_from_columns(const std::vector<Vector>& vectors,
                                Eigen::Index dim_if_empty = 0);

} // namespace zenosim

#endif
