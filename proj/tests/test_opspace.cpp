// Copyright 2026 The cgpkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cgpkit/channels.hpp"
#include "cgpkit/opspace.hpp"
#include "cgpkit/rng.hpp"

using namespace cgpkit;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return m;
}

}  // namespace

TEST_CASE("hs_inner matches hand-computed overlaps") {
    ComplexMatrix x(2, 2);
    x << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
    ComplexMatrix y = pauli_x();
    CHECK(hs_inner(x, y) == Complex(5, 0));
    CHECK(hs_inner(x, x) == Complex(30, 0));

    ComplexMatrix z(1, 1);
    z << Complex(0, 1);
    ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    // Antilinear in the first slot: <iX, Y> = -i <X, Y>.
    CHECK(hs_inner(z, one) == Complex(0, -1));
    CHECK(hs_inner(one, z) == Complex(0, 1));

    CHECK(hs_norm(pauli_x()) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(hs_inner(x, ComplexMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("hermiticity and unitarity predicates") {
    CHECK(is_hermitian(pauli_x()));
    CHECK(is_hermitian(pauli_z()));
    CHECK(is_unitary(hadamard()));
    ComplexMatrix skew(2, 2);
    skew << 0, Complex(0, 1), Complex(0, 1), 0;
    CHECK_FALSE(is_hermitian(skew));
    CHECK_FALSE(is_unitary(2.0 * hadamard()));
    // Tolerance is honored.
    ComplexMatrix near = hadamard();
    near(0, 0) += 1e-6;
    CHECK_FALSE(is_unitary(near));
    CHECK(is_unitary(near, 1e-4));
}

TEST_CASE("dephase keeps the diagonal and q_part the rest") {
    ComplexMatrix x(2, 2);
    x << Complex(1, 0), Complex(2, 5), Complex(3, -1), Complex(4, 0);
    ComplexMatrix d = dephase(x);
    CHECK(d(0, 0) == Complex(1, 0));
    CHECK(d(1, 1) == Complex(4, 0));
    CHECK(d(0, 1) == Complex(0, 0));
    ComplexMatrix q = q_part(x);
    CHECK(q(0, 1) == Complex(2, 5));
    CHECK(q(0, 0) == Complex(0, 0));
    CHECK((d + q - x).norm() == doctest::Approx(0.0));
}

TEST_CASE("q_part of the plus state is half a bit flip") {
    ComplexMatrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK((q_part(plus) - 0.5 * pauli_x()).norm() == doctest::Approx(0.0));
    CHECK((dephase(plus) - 0.5 * ComplexMatrix::Identity(2, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("dephase and q_part are orthogonal projections") {
    StreamRng rng(42);
    for (Index d : {2, 3, 5}) {
        ComplexMatrix x = random_hermitian(d, rng);
        ComplexMatrix dx = dephase(x);
        ComplexMatrix qx = q_part(x);
        CHECK((dephase(dx) - dx).norm() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::abs(hs_inner(dx, qx)) < 1e-12);
        CHECK(x.squaredNorm() ==
              doctest::Approx(dx.squaredNorm() + qx.squaredNorm()).epsilon(1e-12));
    }
}

TEST_CASE("dephasing in a rotated basis") {
    // In the Hadamard basis the diagonal of pauli_z vanishes, so the whole
    // operator is off-diagonal there.
    BasisProjectorSet basis(hadamard());
    CHECK(dephase(pauli_z(), basis).norm() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK((q_part(pauli_z(), basis) - pauli_z()).norm() == doctest::Approx(0.0).epsilon(1e-14));
    // And pauli_x becomes diagonal.
    CHECK((dephase(pauli_x(), basis) - pauli_x()).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("BasisProjectorSet validates and exposes projectors") {
    CHECK_THROWS_AS(BasisProjectorSet(ComplexMatrix::Ones(2, 2)), ValidationError);
    CHECK_THROWS_AS(BasisProjectorSet(Index{0}), ValidationError);

    BasisProjectorSet comp(3);
    CHECK(comp.is_computational());
    CHECK(comp.projector(1)(1, 1) == Complex(1, 0));
    CHECK(comp.projector(1).cwiseAbs().sum() == doctest::Approx(1.0));
    CHECK_THROWS_AS(comp.projector(3), DimensionMismatch);

    BasisProjectorSet had(hadamard());
    CHECK_FALSE(had.is_computational());
    ComplexMatrix p0 = had.projector(0);
    CHECK(p0(0, 1).real() == doctest::Approx(0.5));
    CHECK((p0 * p0 - p0).norm() == doctest::Approx(0.0).epsilon(1e-14));

    // Identity collapses to the computational fast path.
    BasisProjectorSet ident{ComplexMatrix::Identity(4, 4)};
    CHECK(ident.is_computational());
}

TEST_CASE("frame change round-trips") {
    StreamRng rng(7);
    ComplexMatrix v = random_haar_unitary(4, rng);
    BasisProjectorSet basis(v);
    ComplexMatrix x = random_hermitian(4, rng);
    CHECK((basis.from_frame(basis.to_frame(x)) - x).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((basis.basis_unitary() - v).norm() == doctest::Approx(0.0));
}

TEST_CASE("jacobi eigendecomposition on frozen matrices") {
    RealMatrix m(2, 2);
    m << 2, 1, 1, 2;
    SymmetricEigs e = symmetric_eigs(m);
    CHECK(e.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(e.eigenvectors(0, 0)) == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(min_eigenvalue(m) == doctest::Approx(1.0));
    CHECK(max_eigenvalue(m) == doctest::Approx(3.0));

    RealMatrix one(1, 1);
    one << 5.0;
    SymmetricEigs e1 = symmetric_eigs(one);
    CHECK(e1.eigenvalues(0) == 5.0);
    CHECK(e1.eigenvectors(0, 0) == 1.0);
}

TEST_CASE("jacobi agrees with an independent eigensolver") {
    StreamRng rng(2024);
    for (Index d : {2, 3, 4, 6, 8}) {
        ComplexMatrix h = random_hermitian(d, rng);
        RealMatrix m = h.real();
        m = RealMatrix(0.5 * (m + RealMatrix(m.transpose())));
        SymmetricEigs ours = symmetric_eigs(m);

        Eigen::SelfAdjointEigenSolver<RealMatrix> reference(m);
        RealVector ref = reference.eigenvalues().reverse();
        for (Index i = 0; i < d; ++i) {
            CHECK(ours.eigenvalues(i) == doctest::Approx(ref(i)).epsilon(1e-12));
        }
        RealMatrix recon =
            ours.eigenvectors * ours.eigenvalues.asDiagonal() * ours.eigenvectors.transpose();
        CHECK((recon - m).cwiseAbs().maxCoeff() < 1e-12);
        RealMatrix vtv = ours.eigenvectors.transpose() * ours.eigenvectors;
        CHECK((vtv - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("symmetric_eigs rejects bad input") {
    RealMatrix rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(symmetric_eigs(rect), ValidationError);
    RealMatrix asym(2, 2);
    asym << 0, 1, -1, 0;
    CHECK_THROWS_AS(symmetric_eigs(asym), ValidationError);
    // An override widens what is accepted.
    RealMatrix near(2, 2);
    near << 1, 1.0 + 1e-9, 1.0, 1;
    CHECK_THROWS_AS(symmetric_eigs(near), ValidationError);
    CHECK_NOTHROW(symmetric_eigs(near, 1e-6));
}
