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

#include <doctest.h>

#include "support/oracles.hpp"
#include "zenosim/cavity_model.hpp"
#include "zenosim/zeno_engine.hpp"

using namespace zenosim;

namespace {

cavity::ModelParams params(double omega2 = 1.0) {
    cavity::ModelParams p;
    p.omega2 = omega2;
    p.omega1 = cavity::ModelParams::bell_ratio('+') * omega2;
    return p;
}

QuantumState basis_state(int i) {
    Vector v = Vector::Zero(7);
    v[i] = Cx(1.0, 0.0);
    return QuantumState::pure(std::move(v));
}

} // namespace

TEST_CASE("zeno_decompose: model coupling gives five subspaces, kernel targeted") {
    const auto h = cavity::build_hamiltonians(params());
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    REQUIRE(d.subspaces.size() == 5);
    std::vector<int> dims;
    int target_dim = 0;
    for (const auto& sub : d.subspaces) {
        dims.push_back(sub.dim);
        if (sub.is_target) {
            target_dim = sub.dim;
            CHECK(std::abs(sub.eigenvalue) < 1e-10);
        }
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 1, 1, 1, 3});
    CHECK(target_dim == 3);

    // Completeness, orthogonality, reconstruction.
    Matrix sum = Matrix::Zero(7, 7);
    Matrix rebuilt = Matrix::Zero(7, 7);
    for (const auto& sub : d.subspaces) {
        sum += sub.projector.matrix();
        rebuilt += sub.eigenvalue * sub.projector.matrix();
        for (const auto& other : d.subspaces) {
            if (&sub == &other) continue;
            CHECK((sub.projector.matrix() * other.projector.matrix()).cwiseAbs().maxCoeff() <
                  1e-9);
        }
    }
    CHECK((sum - Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((rebuilt - h.h_coupling.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("zeno_decompose: zero operator is one whole-space target subspace") {
    const ZenoDecomposition d = zeno_decompose(Operator::zero(4));
    REQUIRE(d.subspaces.size() == 1);
    CHECK(d.subspaces[0].dim == 4);
    CHECK(d.subspaces[0].is_target);
    CHECK(d.subspaces[0].eigenvalue == doctest::Approx(0.0));
}

TEST_CASE("zeno_decompose: diagonal spectrum has singleton groups, empty kernel target") {
    Matrix m = Matrix::Zero(3, 3);
    m.diagonal() << Cx(1, 0), Cx(2, 0), Cx(3, 0);
    const ZenoDecomposition d = zeno_decompose(Operator(m));
    REQUIRE(d.subspaces.size() == 3);
    for (const auto& sub : d.subspaces) {
        CHECK(sub.dim == 1);
        CHECK_FALSE(sub.is_target);
    }
    CHECK(d.target() == nullptr);
}

TEST_CASE("zeno_decompose: explicit index targeting") {
    Matrix m = Matrix::Zero(3, 3);
    m.diagonal() << Cx(1, 0), Cx(2, 0), Cx(3, 0);
    const ZenoDecomposition d =
        zeno_decompose(Operator(m), 1e-8, TargetRule::explicit_indices({1}));
    CHECK_FALSE(d.subspaces[0].is_target);
    CHECK(d.subspaces[1].is_target);
}

TEST_CASE("zeno_decompose rejects non-Hermitian input") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = Cx(1.0, 0.0);
    CHECK_THROWS_AS(zeno_decompose(Operator(bad)), InvalidArgument);
}

TEST_CASE("effective_hamiltonian: H_0 = 0 reconstructs K H_I") {
    const auto h = cavity::build_hamiltonians(params());
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    const Operator heff = effective_hamiltonian(d, Operator::zero(7));
    CHECK((heff.matrix() - h.h_coupling.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("effective_hamiltonian: target block is the tridiagonal passage") {
    // Oracle: project the drive onto the kernel eigenvectors and read off the
    // matrix elements; the dark-state geometry fixes delta = lambda/sqrt(g^2+2l^2).
    const cavity::ModelParams p = params(0.7);
    const auto h = cavity::build_hamiltonians(p);
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    const Operator heff = effective_hamiltonian(d, h.h_laser);

    const cavity::DressedBasis basis = cavity::dressed_basis(p);
    const double delta = 1.0 / std::sqrt(3.0);
    const Cx c12 = basis.psi[0].dot(heff.matrix() * basis.psi[1]);
    const Cx c23 = basis.psi[1].dot(heff.matrix() * basis.psi[2]);
    CHECK(std::abs(c12) == doctest::Approx(p.omega2 * delta).epsilon(1e-9));
    CHECK(std::abs(c23) == doctest::Approx(p.omega1 * delta).epsilon(1e-9));
    const Cx c13 = basis.psi[0].dot(heff.matrix() * basis.psi[2]);
    CHECK(std::abs(c13) < 1e-10);
}

TEST_CASE("effective_hamiltonian: commuting H_0 passes through") {
    Matrix m = Matrix::Zero(4, 4);
    m.diagonal() << Cx(0, 0), Cx(0, 0), Cx(1, 0), Cx(1, 0);
    const Operator hi(m);
    Matrix h0 = Matrix::Zero(4, 4);
    h0(0, 1) = h0(1, 0) = Cx(0.3, 0.0);   // acts inside the kernel block
    h0(2, 3) = h0(3, 2) = Cx(0.2, 0.0);   // and inside the excited block
    const ZenoDecomposition d = zeno_decompose(hi);
    const Operator heff = effective_hamiltonian(d, Operator(h0));
    CHECK((heff.matrix() - (hi.matrix() + h0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("effective_hamiltonian commutes with every projector") {
    const auto h = cavity::build_hamiltonians(params());
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    const Operator heff = effective_hamiltonian(d, h.h_laser);
    for (const auto& sub : d.subspaces) {
        const Matrix c = heff.matrix() * sub.projector.matrix() -
                         sub.projector.matrix() * heff.matrix();
        CHECK(c.cwiseAbs().maxCoeff() < 1e-9);
        // Off-diagonal blocks vanish.
        for (const auto& other : d.subspaces) {
            if (&sub == &other) continue;
            const Matrix block = sub.projector.matrix() * heff.matrix() *
                                 other.projector.matrix();
            CHECK(block.cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("zeno_violation: kernel state, chain site, maximally mixed") {
    const auto h = cavity::build_hamiltonians(params());
    CHECK(zeno_violation(h.h_coupling, basis_state(0)) == doctest::Approx(0.0));
    // Oracle: direct H_I^2 matrix product.
    const Matrix hi2 = h.h_coupling.matrix() * h.h_coupling.matrix();
    const double want_phi3 = hi2(2, 2).real();
    CHECK(want_phi3 == doctest::Approx(2.0));
    CHECK(zeno_violation(h.h_coupling, basis_state(2)) == doctest::Approx(want_phi3));
    const QuantumState mixed = QuantumState::density(Matrix::Identity(7, 7) / 7.0);
    CHECK(zeno_violation(h.h_coupling, mixed) == doctest::Approx(8.0 / 7.0));
}

TEST_CASE("zeno_violation is linear in the state") {
    const auto h = cavity::build_hamiltonians(params());
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix r1 = oracle::random_density(7);
        const Matrix r2 = oracle::random_density(7);
        const double alpha = 0.37;
        const QuantumState mix = QuantumState::density(alpha * r1 + (1 - alpha) * r2);
        const double lhs = zeno_violation(h.h_coupling, mix);
        const double rhs = alpha * zeno_violation(h.h_coupling, QuantumState::density(r1)) +
                           (1 - alpha) * zeno_violation(h.h_coupling, QuantumState::density(r2));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("zeno_violation stays at zero along the analytic passage") {
    const cavity::ModelParams p = params(0.5);
    const auto h = cavity::build_hamiltonians(p);
    for (double t : {0.0, 1.0, 2.5, 5.0, 7.5, 10.0}) {
        const QuantumState s = cavity::analytic_state(p, t);
        CHECK(zeno_violation(h.h_coupling, s) <= 1e-8);
    }
}

TEST_CASE("rough_hamiltonian: block-diagonal drive needs no compensation") {
    Matrix m = Matrix::Zero(4, 4);
    m.diagonal() << Cx(0, 0), Cx(0, 0), Cx(1, 0), Cx(1, 0);
    const ZenoDecomposition d = zeno_decompose(Operator(m));
    Matrix h0 = Matrix::Zero(4, 4);
    h0(0, 1) = h0(1, 0) = Cx(0.3, 0.0);
    h0(2, 3) = h0(3, 2) = Cx(0.2, 0.0);
    const Operator hr = rough_hamiltonian(d, Operator(h0), RoughMode::AllBlocks);
    CHECK(hr.matrix().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rough_hamiltonian: target block matches the closed-form coefficients") {
    const cavity::ModelParams p = params(1.0);
    const auto h = cavity::build_hamiltonians(p);
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    const Matrix hr = rough_hamiltonian(d, h.h_laser, RoughMode::TargetBlock).matrix();
    const double d2 = 1.0 / 3.0;   // delta^2 at g = lambda = 1
    CHECK(hr(0, 1).real() == doctest::Approx(p.omega2 * (d2 - 1.0)).epsilon(1e-10));
    CHECK(hr(0, 4).real() == doctest::Approx(-p.omega2 * d2).epsilon(1e-10));
    CHECK(hr(5, 6).real() == doctest::Approx(p.omega1 * (d2 - 1.0)).epsilon(1e-10));
}

TEST_CASE("rough_hamiltonian: single whole-space subspace needs nothing") {
    const ZenoDecomposition d = zeno_decompose(Operator::zero(5));
    const Operator h0(oracle::random_hermitian(5));
    CHECK(rough_hamiltonian(d, h0, RoughMode::TargetBlock).matrix().cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("rough_hamiltonian: no flagged target rejected in target-block mode") {
    Matrix m = Matrix::Zero(3, 3);
    m.diagonal() << Cx(1, 0), Cx(2, 0), Cx(3, 0);
    const ZenoDecomposition d = zeno_decompose(Operator(m));
    CHECK_THROWS_AS(rough_hamiltonian(d, Operator::identity(3), RoughMode::TargetBlock),
                    InvalidArgument);
}

TEST_CASE("rough_hamiltonian(all-blocks) + H_0 is block-diagonal") {
    const auto h = cavity::build_hamiltonians(params());
    const ZenoDecomposition d = zeno_decompose(h.h_coupling);
    const Operator hr = rough_hamiltonian(d, h.h_laser, RoughMode::AllBlocks);
    const Matrix total = hr.matrix() + h.h_laser.matrix();
    for (const auto& a : d.subspaces) {
        for (const auto& b : d.subspaces) {
            if (&a == &b) continue;
            CHECK((a.projector.matrix() * total * b.projector.matrix()).cwiseAbs().maxCoeff() <
                  1e-9);
        }
    }
}

TEST_CASE("subspace_populations: basis state, maximally mixed, sum rule") {
    const cavity::DressedBasis basis = cavity::dressed_basis(params());
    const std::vector<double> p1 = subspace_populations(basis.zeno, basis_state(0));
    REQUIRE(p1.size() == 5);
    CHECK(p1[0] == doctest::Approx(1.0));
    for (int i = 1; i < 5; ++i) CHECK(std::abs(p1[i]) < 1e-12);

    const QuantumState mixed = QuantumState::density(Matrix::Identity(7, 7) / 7.0);
    const std::vector<double> pm = subspace_populations(basis.zeno, mixed);
    CHECK(pm[0] == doctest::Approx(3.0 / 7.0));
    for (int i = 1; i < 5; ++i) CHECK(pm[i] == doctest::Approx(1.0 / 7.0));

    for (int trial = 0; trial < 10; ++trial) {
        const QuantumState rho = QuantumState::density(oracle::random_density(7));
        const std::vector<double> pops = subspace_populations(basis.zeno, rho);
        double sum = 0.0;
        for (double v : pops) {
            CHECK(v > -1e-9);
            CHECK(v < 1.0 + 1e-9);
            sum += v;
        }
        CHECK(sum == doctest::Approx(rho.trace()).epsilon(1e-9));
    }
}
