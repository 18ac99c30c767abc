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
#include "zenosim/dynamics.hpp"

using namespace zenosim;
using namespace zenosim::cavity;

namespace {

ModelParams params(double omega2 = 1.0, char sign = '+') {
    ModelParams p;
    p.omega2 = omega2;
    p.omega1 = ModelParams::bell_ratio(sign) * omega2;
    return p;
}

ModelParams random_params() {
    std::uniform_real_distribution<double> u(0.2, 2.0);
    ModelParams p;
    p.g = u(oracle::rng());
    p.lambda = u(oracle::rng());
    p.omega2 = u(oracle::rng());
    p.omega1 = u(oracle::rng());
    return p;
}

} // namespace

TEST_CASE("build_hamiltonians: couplings land on the advertised transitions") {
    const ModelParams p = params(0.8);
    const Hamiltonians h = build_hamiltonians(p);
    const Matrix& hl = h.h_laser.matrix();
    const Matrix& hi = h.h_coupling.matrix();

    CHECK(hl(0, 1).real() == doctest::Approx(p.omega2));
    CHECK(hl(5, 6).real() == doctest::Approx(p.omega1));
    CHECK(hl.cwiseAbs().sum() == doctest::Approx(2 * (p.omega1 + p.omega2)));

    CHECK(hi(1, 2).real() == doctest::Approx(p.g));
    CHECK(hi(2, 4).real() == doctest::Approx(p.lambda));
    CHECK(hi(3, 4).real() == doctest::Approx(p.lambda));
    CHECK(hi(3, 6).real() == doctest::Approx(p.g));
    // phi1 and phi6 rows/columns vanish: no cavity photon and the atom in g.
    CHECK(hi.row(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(hi.col(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(hi.row(5).cwiseAbs().maxCoeff() == 0.0);
    CHECK(hi.col(5).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_hamiltonians: coupling spectrum {0x3, +-g, +-sqrt(g^2+2l^2)}") {
    const Hamiltonians h = build_hamiltonians(params());
    const Spectrum s = hermitian_eigendecomposition(h.h_coupling);
    const double s3 = std::sqrt(3.0);
    for (int i = 0; i < 7; ++i) {
        const double want = std::vector<double>{-s3, -1, 0, 0, 0, 1, s3}[i];
        CHECK(s.eigenvalues[i] == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("build_hamiltonians: zero drive") {
    ModelParams p;
    p.omega1 = p.omega2 = 0.0;
    CHECK(build_hamiltonians(p).h_laser.matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dressed_basis: dark state and kernel projections") {
    const ModelParams p = params();
    const DressedBasis d = dressed_basis(p);
    CHECK(d.delta == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(d.omega == doctest::Approx(std::hypot(p.omega1, p.omega2)).epsilon(1e-12));

    const Hamiltonians h = build_hamiltonians(p);
    // psi2 is annihilated by the coupling.
    CHECK((h.h_coupling.matrix() * d.psi[1]).cwiseAbs().maxCoeff() < 1e-12);
    // <psi2|H_laser|phi1> = omega2 * delta (inner-product oracle).
    Vector phi1 = Vector::Zero(kDim);
    phi1[0] = Cx(1, 0);
    const Cx amp = d.psi[1].dot(h.h_laser.matrix() * phi1);
    CHECK(amp.real() == doctest::Approx(p.omega2 * d.delta).epsilon(1e-12));
    // Dressed chain states diagonalize the coupling with the model ordering.
    const std::array<double, 7> evs = {0.0, 0.0, 0.0, 1.0, -1.0, std::sqrt(3.0),
                                       -std::sqrt(3.0)};
    for (int i = 0; i < 7; ++i) {
        const Vector r = h.h_coupling.matrix() * d.psi[i] - evs[i] * d.psi[i];
        CHECK(r.cwiseAbs().maxCoeff() < 1e-12);
    }
    // Zeno decomposition in model order.
    REQUIRE(d.zeno.subspaces.size() == 5);
    CHECK(d.zeno.subspaces[0].is_target);
    CHECK(d.zeno.subspaces[1].eigenvalue == doctest::Approx(1.0));
    CHECK(d.zeno.subspaces[2].eigenvalue == doctest::Approx(-1.0));
    CHECK(d.zeno.subspaces[3].eigenvalue == doctest::Approx(std::sqrt(3.0)));
    CHECK(d.zeno.subspaces[4].eigenvalue == doctest::Approx(-std::sqrt(3.0)));
}

TEST_CASE("dressed_basis: delta from the kernel-projection route on random params") {
    for (int trial = 0; trial < 20; ++trial) {
        const ModelParams p = random_params();
        const DressedBasis d = dressed_basis(p);
        const Hamiltonians h = build_hamiltonians(p);
        // Route 2: project the drive onto the kernel and read the coupling.
        Vector phi1 = Vector::Zero(kDim);
        phi1[0] = Cx(1, 0);
        const Cx amp = d.psi[1].dot(h.h_laser.matrix() * phi1);
        CHECK(amp.real() == doctest::Approx(p.omega2 * d.delta).epsilon(1e-10));
        CHECK(d.delta ==
              doctest::Approx(p.lambda / std::sqrt(p.g * p.g + 2 * p.lambda * p.lambda))
                  .epsilon(1e-12));
    }
}

TEST_CASE("analytic_state: starts at phi1, reaches the Bell state at t_s") {
    const ModelParams p = params(0.5);
    const QuantumState s0 = analytic_state(p, 0.0);
    CHECK(std::abs(s0.amplitudes()[0] - Cx(1, 0)) < 1e-12);

    const double ts = passage_time(p);
    CHECK(ts == doctest::Approx(10.0544) .epsilon(1e-4));
    const QuantumState st = analytic_state(p, ts);
    // Up to a global sign: both phi1 and phi6 carry -1/sqrt(2).
    CHECK(st.amplitudes()[0].real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(st.amplitudes()[5].real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(fidelity(bell_target('+'), st) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic_state: normalized at random times") {
    const ModelParams p = params(0.9);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        const QuantumState s = analytic_state(p, u(oracle::rng()));
        CHECK(s.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("bell_target: amplitudes, overlap with phi1, orthogonality") {
    const QuantumState plus = bell_target('+');
    CHECK(plus.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(plus.amplitudes()[5].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    Vector phi1 = Vector::Zero(kDim);
    phi1[0] = Cx(1, 0);
    CHECK(fidelity(plus, QuantumState::pure(phi1)) == doctest::Approx(0.5));
    const QuantumState minus = bell_target('-');
    CHECK(std::abs(plus.amplitudes().dot(minus.amplitudes())) < 1e-15);
}

TEST_CASE("dissipator: zero rates, uniform rate, experimental preset") {
    ModelParams p = params();
    CHECK(dissipator(p).matrix().cwiseAbs().maxCoeff() == 0.0);

    const Operator u = uniform_dissipator(0.01);
    for (int i : {1, 2, 3, 4, 6}) {
        CHECK(u.matrix()(i, i) == Cx(0.0, -0.005));
    }
    CHECK(u.matrix()(0, 0) == Cx(0, 0));
    CHECK(u.matrix()(5, 5) == Cx(0, 0));
    CHECK((u.matrix() + u.matrix().adjoint()).cwiseAbs().maxCoeff() < 1e-15);

    // Fabry-Perot rates, both channel readings.
    p.gamma_atom = 0.0035;
    p.gamma_cavity = 0.0047;
    p.gamma_fiber = 0.0002;
    const Matrix acf = dissipator(p, ChannelMapping::AtomCavityFiber).matrix();
    CHECK(acf(1, 1) == Cx(0.0, -0.5 * 0.0035));
    CHECK(acf(2, 2) == Cx(0.0, -0.5 * 0.0047));
    CHECK(acf(4, 4) == Cx(0.0, -0.5 * 0.0002));
    const Matrix caf = dissipator(p, ChannelMapping::CavityAtomFiber).matrix();
    CHECK(caf(1, 1) == Cx(0.0, -0.5 * 0.0047));
    CHECK(caf(2, 2) == Cx(0.0, -0.5 * 0.0035));

    p.gamma_atom = -1.0;
    CHECK_THROWS_AS(dissipator(p), InvalidArgument);
}

TEST_CASE("explicit_rough_hamiltonian: zero drive and the delta^2 coefficient") {
    ModelParams p;
    p.omega1 = p.omega2 = 0.0;
    CHECK(explicit_rough_hamiltonian(p).matrix().cwiseAbs().maxCoeff() == 0.0);

    const ModelParams q = params(1.0);
    const Matrix hr = explicit_rough_hamiltonian(q).matrix();
    CHECK(hr(0, 1).real() == doctest::Approx(1.0 / 3.0 - 1.0).epsilon(1e-12));
}

TEST_CASE("explicit vs generic rough construction on 50 random parameter draws") {
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p = random_params();
        const Hamiltonians h = build_hamiltonians(p);
        const ZenoDecomposition d = zeno_decompose(h.h_coupling);
        const Matrix generic = rough_hamiltonian(d, h.h_laser, RoughMode::TargetBlock).matrix();
        const Matrix explicit_form = explicit_rough_hamiltonian(p).matrix();
        CHECK((generic - explicit_form).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("complete dressed set: thirteen channels, duplicated head, off-target action") {
    const ModelParams p = params();
    const ControlSet set = build_complete_dressed_set(p, 10.0);
    REQUIRE(set.channels.size() == 13);
    CHECK(set.has_compensation());
    CHECK(set.channels[0].law == ControlLaw::Compensation);
    CHECK((set.channels[0].op.matrix() - set.channels[1].op.matrix()).cwiseAbs().maxCoeff() <
          1e-15);
    const DressedBasis d = dressed_basis(p);
    const Matrix pt = d.zeno.target_projector().matrix();
    for (const auto& c : set.channels) {
        CHECK(c.op.is_hermitian(1e-12));
        CHECK((pt * c.op.matrix() * pt).cwiseAbs().maxCoeff() < 1e-10);
        if (c.law == ControlLaw::Proportional && c.id != 1) {
            CHECK(c.gain == doctest::Approx(10.0));
        }
    }
}

TEST_CASE("realizable set: five channels, constant fiber channel") {
    const ControlSet set = build_realizable_set(params(), ControlLaw::Proportional, 0.6);
    REQUIRE(set.channels.size() == 5);
    CHECK_FALSE(set.has_compensation());
    CHECK(set.channels[4].law == ControlLaw::Constant);
    CHECK(set.channels[4].id == 5);
    for (const auto& c : set.channels) CHECK(c.op.is_hermitian(1e-12));

    // Channel 1 is the phi1-phi2 block of the drive at unit coupling.
    const Hamiltonians h = build_hamiltonians(params(1.0));
    Matrix block = Matrix::Zero(kDim, kDim);
    block(0, 1) = h.h_laser.matrix()(0, 1);
    block(1, 0) = h.h_laser.matrix()(1, 0);
    CHECK((set.channels[0].op.matrix() - block).cwiseAbs().maxCoeff() < 1e-15);

    const ControlSet bang = build_realizable_set(params(), ControlLaw::BangBang, 0.5);
    CHECK(bang.channels[0].amplitude == doctest::Approx(0.5));
}

TEST_CASE("passage_time matches pi/(Omega delta) over the bell ratios") {
    for (char sign : {'+', '-'}) {
        const ModelParams p = params(0.75, sign);
        const DressedBasis d = dressed_basis(p);
        CHECK(passage_time(p) == doctest::Approx(M_PI / (d.omega * d.delta)).epsilon(1e-12));
    }
}

TEST_CASE("model params validation") {
    ModelParams p;
    p.g = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p = ModelParams{};
    p.omega1 = -0.1;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
}
