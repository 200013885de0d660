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
#include <string>
#include <vector>

#include "cgpkit/ensembles.hpp"

using namespace cgpkit;

namespace {

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m << s, s, s, -s;
    return m;
}

ComplexMatrix rotation(double theta) {
    ComplexMatrix m(2, 2);
    m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return m;
}

}  // namespace

TEST_CASE("haar second moments, frozen") {
    SimplexCorrelationMatrix s2 = scm_haar(2);
    CHECK(std::abs(s2.entries()(0, 0) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(s2.entries()(0, 1) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(s2.entries()(1, 1) - 1.0 / 3.0) < 1e-15);
    CHECK(s2.provenance().kind == ScmKind::haar);

    SimplexCorrelationMatrix s3 = scm_haar(3);
    CHECK(std::abs(s3.entries()(0, 0) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(s3.entries()(2, 1) - 1.0 / 12.0) < 1e-15);
    CHECK(std::abs(s3.entries().sum() - 1.0) < 1e-12);
}

TEST_CASE("vertex ensemble is the scaled identity") {
    SimplexCorrelationMatrix s = scm_vertex(3);
    CHECK((s.entries() - RealMatrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(s.provenance().kind == ScmKind::vertex);
}

TEST_CASE("permutation-invariant family covers haar, vertex and uniform") {
    const Index d = 4;
    // alpha = 1/(d(d+1)) reproduces the haar moments.
    double a_haar = 1.0 / (d * (d + 1.0));
    CHECK((scm_perm_invariant(d, a_haar).entries() - scm_haar(d).entries())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    // alpha = 1/d is the vertex mixture.
    CHECK((scm_perm_invariant(d, 1.0 / d).entries() - scm_vertex(d).entries())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    // alpha = 0 is the point mass on the uniform vector: J / d².
    CHECK((scm_perm_invariant(d, 0.0).entries() - RealMatrix::Constant(d, d, 1.0 / (d * d)))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("permutation-invariant weight range is enforced") {
    CHECK_THROWS_AS(scm_perm_invariant(3, -0.1), ValidationError);
    CHECK_THROWS_AS(scm_perm_invariant(3, 1.0 / 3.0 + 0.1), ValidationError);
    // Both endpoints are valid.
    CHECK_NOTHROW(scm_perm_invariant(3, 0.0));
    CHECK_NOTHROW(scm_perm_invariant(3, 1.0 / 3.0));
}

TEST_CASE("dirichlet monte carlo reproduces closed-form second moments") {
    // Flat Dirichlet on the 3-simplex has the same second moments as
    // dephased Haar states.
    SimplexCorrelationMatrix mc = scm_dirichlet_mc(3, {1.0, 1.0, 1.0}, 60000, 99);
    CHECK((mc.entries() - scm_haar(3).entries()).cwiseAbs().maxCoeff() < 0.01);
    CHECK(mc.provenance().kind == ScmKind::dirichlet);
    CHECK(mc.provenance().n_samples == 60000);
    CHECK(mc.provenance().seed == 99);
    CHECK(mc.provenance().params == std::vector<double>{1.0, 1.0, 1.0});

    // Skewed parameters: E[p_i p_j] = a_i (a_j + delta_ij) / (a0 (a0+1)).
    SimplexCorrelationMatrix skew = scm_dirichlet_mc(3, {1.0, 2.0, 3.0}, 60000, 7);
    RealMatrix expected(3, 3);
    expected << 2.0 / 42, 2.0 / 42, 3.0 / 42,
                2.0 / 42, 6.0 / 42, 6.0 / 42,
                3.0 / 42, 6.0 / 42, 12.0 / 42;
    CHECK((skew.entries() - expected).cwiseAbs().maxCoeff() < 0.01);

    // Deterministic under the seed.
    SimplexCorrelationMatrix again = scm_dirichlet_mc(3, {1.0, 2.0, 3.0}, 60000, 7);
    CHECK((skew.entries() - again.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("empirical wrapper validates its input") {
    CHECK_NOTHROW(scm_empirical(scm_haar(4).entries(), 123));
    CHECK(scm_empirical(scm_haar(4).entries()).provenance().kind == ScmKind::empirical);

    RealMatrix bad_sum = RealMatrix::Identity(2, 2);  // sums to 2
    CHECK_THROWS_AS(scm_empirical(bad_sum), ValidationError);

    RealMatrix asym(2, 2);
    asym << 0.4, 0.1, 0.2, 0.3;
    CHECK_THROWS_AS(scm_empirical(asym), ValidationError);

    RealMatrix negative(2, 2);
    negative << 0.6, -0.1, -0.1, 0.6;
    CHECK_THROWS_AS(scm_empirical(negative), ValidationError);
}

TEST_CASE("relabeling an ensemble permutes its second moments") {
    SimplexCorrelationMatrix s = scm_dirichlet_mc(3, {1.0, 2.0, 3.0}, 2000, 5);
    std::vector<Index> sigma{1, 2, 0};
    SimplexCorrelationMatrix t = scm_conjugate(s, sigma);
    for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 3; ++j) {
            CHECK(t.entries()(sigma[static_cast<std::size_t>(i)],
                              sigma[static_cast<std::size_t>(j)]) == s.entries()(i, j));
        }
    }
    CHECK(t.provenance().kind == ScmKind::empirical);

    CHECK_THROWS_AS(scm_conjugate(s, std::vector<Index>{0, 1}), DimensionMismatch);
    CHECK_THROWS_AS(scm_conjugate(s, std::vector<Index>{0, 0, 1}), ValidationError);
}

TEST_CASE("haar pairing equals the rescaled trace measure") {
    // Frozen: hadamard against the haar ensemble.
    CoherenceMatrix ch = coherence_matrix(Channel::from_unitary(hadamard()));
    CHECK(std::abs(cgp_ensemble(ch, scm_haar(2)) - 1.0 / 6.0) < 1e-14);

    // Identity in general: <C, S_haar> = trace / (d (d+1)).
    StreamRng rng(606);
    for (int trial = 0; trial < 5; ++trial) {
        Channel c = random_unital_channel(3, 2, rng);
        CoherenceMatrix k = coherence_matrix(c);
        double paired = cgp_ensemble(k, scm_haar(3));
        CHECK(std::abs(paired - cgp_g(c, BasisProjectorSet(3))) < 1e-12);
    }
}

TEST_CASE("vertex pairing equals the rescaled diagonal sum") {
    CoherenceMatrix c = coherence_matrix(Channel::from_unitary(fourier_unitary(3)));
    double paired = cgp_ensemble(c, scm_vertex(3));
    CHECK(std::abs(paired - c.entries().trace() / 3.0) < 1e-14);
    CHECK_THROWS_AS(cgp_ensemble(c, scm_vertex(2)), DimensionMismatch);
}

TEST_CASE("qubit symmetric ensemble closed form, frozen") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(cgp_qubit_symmetric(s, s, 0.5) - 0.5) < 1e-14);
    CHECK(std::abs(cgp_qubit_symmetric(s, s, 0.25)) < 1e-14);

    const double t = 0.7;
    const Complex a = std::sqrt(t);
    const Complex b = std::sqrt(1.0 - t);
    // (2/3 - 1/2) · (2 sqrt(0.21))² = 0.84 / 6 = 0.14.
    CHECK(std::abs(cgp_qubit_symmetric(a, b, 1.0 / 3.0) - 0.14) < 1e-14);

    CHECK_THROWS_AS(cgp_qubit_symmetric(1.0, 1.0, 0.4), ValidationError);
    CHECK_THROWS_AS(cgp_qubit_symmetric(s, s, 0.2), ValidationError);
    CHECK_THROWS_AS(cgp_qubit_symmetric(s, s, 0.6), ValidationError);
}

TEST_CASE("qubit closed form matches the matrix pipeline") {
    for (double t : {0.1, 0.5, 0.7, 0.95}) {
        ComplexMatrix u = rotation(std::acos(std::sqrt(t)));
        CoherenceMatrix c = coherence_matrix_unitary(transfer_matrix(u));
        for (double alpha : {0.25, 1.0 / 3.0, 0.4, 0.5}) {
            // The matching permutation-invariant weight is 2 alpha - 1/2.
            SimplexCorrelationMatrix s = scm_perm_invariant(2, 2.0 * alpha - 0.5);
            double closed = cgp_qubit_symmetric(u(0, 0), u(1, 0), alpha);
            CHECK(std::abs(cgp_ensemble(c, s) - closed) < 1e-12);
        }
    }
}

TEST_CASE("haar-state sampler agrees with the exact haar average") {
    Channel h = Channel::from_unitary(hadamard());
    MonteCarloEstimate est = haar_state_mc_oracle(h, BasisProjectorSet(2), 20000, 11);
    CHECK(std::abs(est.value - 1.0 / 6.0) < 5.0 * est.std_error + 1e-12);

    Channel mixed = random_unital_channel(3, 3, 321);
    MonteCarloEstimate m = haar_state_mc_oracle(mixed, BasisProjectorSet(3), 20000, 12);
    CHECK(std::abs(m.value - cgp_g(mixed, BasisProjectorSet(3))) < 5.0 * m.std_error + 1e-12);

    MonteCarloEstimate again = haar_state_mc_oracle(mixed, BasisProjectorSet(3), 20000, 12);
    CHECK(again.value == m.value);
    CHECK_THROWS_AS(haar_state_mc_oracle(mixed, BasisProjectorSet(3), 0, 1), ValidationError);
}

TEST_CASE("ensemble kind names round trip") {
    for (ScmKind k : {ScmKind::haar, ScmKind::vertex, ScmKind::perm_invariant,
                      ScmKind::dirichlet, ScmKind::empirical}) {
        CHECK(scm_kind_from_name(scm_kind_name(k)) == k);
    }
    CHECK(std::string(scm_kind_name(ScmKind::perm_invariant)) == "perm_invariant");
    CHECK_THROWS_AS(scm_kind_from_name("gaussian"), ValidationError);
}
