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
#include <vector>

#include "cgpkit/additive.hpp"

using namespace cgpkit;

namespace {

ComplexMatrix rotation(double theta) {
    ComplexMatrix m(2, 2);
    m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return m;
}

// Bistochastic [[t, 1-t], [1-t, t]] realized by a real rotation.
TransferMatrix two_point(double t) {
    return transfer_matrix(rotation(std::acos(std::sqrt(t))));
}

}  // namespace

TEST_CASE("flat transfer matrices maximize every family") {
    for (Index d : {2, 3, 5}) {
        TransferMatrix x = transfer_matrix(fourier_unitary(d));
        const double logd = std::log(static_cast<double>(d));
        CHECK(std::abs(phi_p(x) - logd) < 1e-12);
        CHECK(std::abs(phi_g_tilde(x) - logd) < 1e-12);
        for (double alpha : {0.0, 0.5, 1.0, 1.7, 2.0}) {
            CHECK(std::abs(phi_alpha(x, alpha) - logd) < 1e-12);
        }
        // The flat matrix is rank one, so the determinant-based measure
        // diverges. The computed matrix may sit an ulp off flat, which
        // leaves a noise-level determinant instead of an exact zero; the
        // divergence still clears log d by a huge margin.
        CHECK(phi_g(x) > logd + 10.0);

        // Bitwise-flat input: the pivot vanishes exactly and the measure
        // reports its infinity flag.
        TransferMatrix flat(RealMatrix::Constant(d, d, 1.0 / static_cast<double>(d)));
        CHECK(std::isinf(phi_g(flat)));
        CHECK(phi_g(flat) > 0.0);
    }
}

TEST_CASE("two-point mixing channel, frozen values") {
    // X = [[0.9, 0.1], [0.1, 0.9]]: det = 0.8, ||X||² = 1.64.
    TransferMatrix x = two_point(0.9);
    CHECK(std::abs(phi_p(x) + std::log(0.82)) < 1e-12);
    CHECK(std::abs(phi_g(x) + 0.5 * std::log(0.8)) < 1e-12);

    const double shannon = -(0.9 * std::log(0.9) + 0.1 * std::log(0.1));
    CHECK(std::abs(phi_g_tilde(x) - shannon) < 1e-12);
    // Identical columns: the order-2 entropy mean equals the purity form.
    CHECK(std::abs(phi_alpha(x, 2.0) - phi_p(x)) < 1e-12);
    // Order 0 counts the support of each column.
    CHECK(std::abs(phi_alpha(x, 0.0) - std::log(2.0)) < 1e-12);
}

TEST_CASE("permutations score zero in every family") {
    StreamRng rng(17);
    IncoherentUnitarySpec spec = random_incoherent_spec(3, rng);
    TransferMatrix x = transfer_matrix(Channel::incoherent_unitary(spec).unitary());
    CHECK(std::abs(phi_p(x)) < 1e-12);
    CHECK(std::abs(phi_g(x)) < 1e-12);
    CHECK(std::abs(phi_g_tilde(x)) < 1e-12);
    CHECK(std::abs(phi_alpha(x, 0.0)) < 1e-12);
    CHECK(std::abs(phi_alpha(x, 1.3)) < 1e-12);
}

TEST_CASE("all four families add over tensor products") {
    ComplexMatrix u = rotation(0.3);
    ComplexMatrix v = rotation(0.5);
    TransferMatrix xu = transfer_matrix(u);
    TransferMatrix xv = transfer_matrix(v);
    TransferMatrix xt = transfer_matrix(kron(u, v));

    CHECK(std::abs(phi_p(xt) - phi_p(xu) - phi_p(xv)) < 1e-12);
    CHECK(std::abs(phi_g(xt) - phi_g(xu) - phi_g(xv)) < 1e-12);
    CHECK(std::abs(phi_g_tilde(xt) - phi_g_tilde(xu) - phi_g_tilde(xv)) < 1e-12);
    CHECK(std::abs(phi_alpha(xt, 1.3) - phi_alpha(xu, 1.3) - phi_alpha(xv, 1.3)) < 1e-12);
}

TEST_CASE("composing with incoherent unitaries changes nothing") {
    StreamRng rng(23);
    ComplexMatrix u = random_haar_unitary(3, rng);
    IncoherentUnitarySpec spec = random_incoherent_spec(3, rng);
    ComplexMatrix w = Channel::incoherent_unitary(spec).unitary();

    TransferMatrix x = transfer_matrix(u);
    TransferMatrix pre = transfer_matrix(u * w);
    TransferMatrix post = transfer_matrix(w * u);
    for (const TransferMatrix* y : {&pre, &post}) {
        CHECK(std::abs(phi_p(*y) - phi_p(x)) < 1e-10);
        CHECK(std::abs(phi_g(*y) - phi_g(x)) < 1e-10);
        CHECK(std::abs(phi_g_tilde(*y) - phi_g_tilde(x)) < 1e-10);
        CHECK(std::abs(phi_alpha(*y, 0.7) - phi_alpha(x, 0.7)) < 1e-10);
    }
}

TEST_CASE("order-alpha mean entropy decreases in alpha") {
    StreamRng rng(29);
    TransferMatrix x = transfer_matrix(random_haar_unitary(4, rng));
    const std::vector<double> grid{0.0, 0.3, 0.7, 1.0, 1.4, 2.0};
    double prev = phi_alpha(x, grid[0]);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        double cur = phi_alpha(x, grid[k]);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
    // alpha = 1 is routed to the exact Shannon branch.
    CHECK(phi_alpha(x, 1.0) == phi_g_tilde(x));
    CHECK(phi_alpha(x, 1.0 + 1e-10) == phi_g_tilde(x));
    // Just outside the routing window the generic branch is continuous.
    CHECK(std::abs(phi_alpha(x, 1.0 + 1e-6) - phi_g_tilde(x)) < 1e-4);
}

TEST_CASE("bounded families stay inside [0, log d]") {
    StreamRng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        TransferMatrix x = transfer_matrix(random_haar_unitary(4, rng));
        const double logd = std::log(4.0);
        for (double v : {phi_p(x), phi_g_tilde(x), phi_alpha(x, 0.5), phi_alpha(x, 2.0)}) {
            CHECK(v >= -1e-12);
            CHECK(v <= logd + 1e-12);
        }
        // The determinant measure is only bounded below.
        CHECK(phi_g(x) >= -1e-12);
    }
}

TEST_CASE("column distribution validation and entropies") {
    RealVector u = RealVector::Constant(4, 0.25);
    ColumnDistribution flat(u);
    CHECK(std::abs(flat.shannon_entropy() - std::log(4.0)) < 1e-14);
    CHECK(std::abs(flat.renyi_entropy(2.0) - std::log(4.0)) < 1e-14);

    RealVector point(3);
    point << 1.0, 0.0, 0.0;
    ColumnDistribution delta(point);
    CHECK(delta.shannon_entropy() == 0.0);
    CHECK(delta.renyi_entropy(0.0) == 0.0);

    // Round-off slightly below zero is clamped; anything worse throws.
    RealVector jitter(2);
    jitter << 1.0 + 1e-13, -1e-13;
    CHECK_NOTHROW((ColumnDistribution(jitter)));
    RealVector bad(2);
    bad << 1.001, -0.001;
    CHECK_THROWS_AS((ColumnDistribution(bad)), ValidationError);

    RealVector short_sum(2);
    short_sum << 0.5, 0.4;
    CHECK_THROWS_AS((ColumnDistribution(short_sum)), ValidationError);

    CHECK_THROWS_AS(flat.renyi_entropy(-0.1), ValidationError);
    CHECK_THROWS_AS(flat.renyi_entropy(2.5), ValidationError);
    TransferMatrix x = two_point(0.9);
    CHECK_THROWS_AS(ColumnDistribution(x, 5), DimensionMismatch);
}
