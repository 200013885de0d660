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
#include <set>

#include "cgpkit/channels.hpp"

using namespace cgpkit;

namespace {

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m << s, s, s, -s;
    return m;
}

// Amplitude damping: trace preserving but not unital.
std::vector<ComplexMatrix> damping_kraus(double gamma) {
    ComplexMatrix k0(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    ComplexMatrix k1(2, 2);
    k1 << 0, std::sqrt(gamma), 0, 0;
    return {k0, k1};
}

}  // namespace

TEST_CASE("stream rng determinism and stream separation") {
    StreamRng a(123, 0);
    StreamRng b(123, 0);
    StreamRng c(123, 1);
    StreamRng d(124, 0);
    bool all_equal = true;
    bool c_differs = false;
    bool d_differs = false;
    for (int i = 0; i < 64; ++i) {
        auto va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        c_differs = c_differs || (va != c.next_u64());
        d_differs = d_differs || (va != d.next_u64());
    }
    CHECK(all_equal);
    CHECK(c_differs);
    CHECK(d_differs);
}

TEST_CASE("uniform and gaussian samplers have the right moments") {
    StreamRng rng(5);
    const int n = 100000;
    double sum_u = 0.0;
    double sum_g = 0.0;
    double sum_g2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum_u += u;
        double g = rng.gaussian();
        sum_g += g;
        sum_g2 += g * g;
    }
    // 5 sigma bands.
    CHECK(std::abs(sum_u / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(sum_g / n) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sum_g2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("dirichlet samples live on the simplex") {
    StreamRng rng(6);
    for (int t = 0; t < 200; ++t) {
        auto p = rng.dirichlet({1.0, 2.0, 0.5, 1.5});
        double total = 0.0;
        for (double x : p) {
            REQUIRE(x >= 0.0);
            total += x;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Tiny concentrations collapse to vertices instead of NaN.
    for (int t = 0; t < 50; ++t) {
        auto p = rng.dirichlet({1e-12, 1e-12, 1e-12});
        double maxp = std::max({p[0], p[1], p[2]});
        CHECK(maxp > 0.999);
        CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0));
    }
    // Flat Dirichlet first moments.
    StreamRng rng2(7);
    double mean0 = 0.0;
    const int n = 20000;
    for (int t = 0; t < n; ++t) {
        mean0 += rng2.dirichlet({1.0, 1.0, 1.0})[0];
    }
    CHECK(std::abs(mean0 / n - 1.0 / 3.0) < 5.0 * std::sqrt(1.0 / 18.0 / n));
}

TEST_CASE("random permutations are valid and cover all orders") {
    StreamRng rng(8);
    std::set<std::vector<Index>> seen;
    for (int t = 0; t < 200; ++t) {
        auto p = rng.permutation(3);
        std::set<Index> uniq(p.begin(), p.end());
        REQUIRE(uniq.size() == 3);
        seen.insert(p);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("channel validation accepts unital and rejects the rest") {
    CHECK_NOTHROW(Channel::from_kraus({hadamard()}));
    CHECK_NOTHROW(Channel::dephasing(3));

    // Trace preserving but not unital: distinct error type.
    CHECK_THROWS_AS(Channel::from_kraus(damping_kraus(0.3)), NotUnitalError);
    try {
        Channel::from_kraus(damping_kraus(0.3));
        FAIL("expected NotUnitalError");
    } catch (const NotUnitalError& e) {
        CHECK(std::string(e.what()).find("unital") != std::string::npos);
    }

    // Not trace preserving: plain validation error, not the unital one.
    ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(Channel::from_kraus({half}), ValidationError);
    bool not_unital_type = false;
    try {
        Channel::from_kraus({half});
    } catch (const NotUnitalError&) {
        not_unital_type = true;
    } catch (const ValidationError&) {
    }
    CHECK_FALSE(not_unital_type);

    CHECK_THROWS_AS(Channel::from_kraus({}), ValidationError);
    CHECK_THROWS_AS(Channel::from_unitary(ComplexMatrix::Ones(2, 2)), ValidationError);

    // Loosening the tolerance admits slightly off inputs.
    ComplexMatrix near = hadamard();
    near(0, 0) += 1e-6;
    CHECK_THROWS_AS(Channel::from_kraus({near}), ValidationError);
    CHECK_NOTHROW(Channel::from_kraus({near}, "", 1e-4));
}

TEST_CASE("apply, compose and unitary accessor") {
    Channel h = Channel::from_unitary(hadamard(), "hadamard");
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    ComplexMatrix plus = h.apply(zero);
    CHECK(plus(0, 1).real() == doctest::Approx(0.5));
    CHECK(plus.trace().real() == doctest::Approx(1.0));

    Channel twice = compose(h, h);
    CHECK((twice.apply(zero) - zero).norm() == doctest::Approx(0.0).epsilon(1e-14));

    CHECK(h.is_unitary_channel());
    CHECK(h.label() == "hadamard");
    Channel deph = Channel::dephasing(2);
    CHECK_FALSE(deph.is_unitary_channel());
    CHECK_THROWS_AS(deph.unitary(), UnitaryOnlyError);

    // Dephasing kills off-diagonals.
    CHECK(deph.apply(plus)(0, 1) == Complex(0, 0));
}

TEST_CASE("incoherent unitaries permute the basis with phases") {
    IncoherentUnitarySpec spec;
    spec.permutation = {1, 0};
    spec.phases = {Complex(1, 0), Complex(0, 1)};
    Channel w = Channel::incoherent_unitary(spec);
    ComplexMatrix expect(2, 2);
    expect << 0, Complex(0, 1), 1, 0;
    CHECK((w.unitary() - expect).norm() == doctest::Approx(0.0));

    IncoherentUnitarySpec bad = spec;
    bad.permutation = {1, 1};
    CHECK_THROWS_AS(Channel::incoherent_unitary(bad), ValidationError);
    bad = spec;
    bad.phases[0] = Complex(2, 0);
    CHECK_THROWS_AS(Channel::incoherent_unitary(bad), ValidationError);
}

TEST_CASE("tensor uses the row-major index pairing") {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    Channel cx = Channel::from_unitary(x);
    Channel ci = Channel::identity(2);
    Channel t = tensor(cx, ci);
    CHECK(t.dim() == 4);
    // (X ⊗ I)|00> = |10>: row index 1*2+0 = 2.
    ComplexMatrix e00 = ComplexMatrix::Zero(4, 4);
    e00(0, 0) = 1.0;
    ComplexMatrix out = t.apply(e00);
    CHECK(out(2, 2).real() == doctest::Approx(1.0));

    Channel t2 = tensor(ci, cx);
    ComplexMatrix out2 = t2.apply(e00);
    CHECK(out2(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("conjugated_by moves a channel into a new frame") {
    StreamRng rng(11);
    ComplexMatrix v = random_haar_unitary(3, rng);
    Channel ch = random_unital_channel(3, 2, rng);
    Channel framed = ch.conjugated_by(v);
    ComplexMatrix rho = random_density_matrix(3, rng);
    ComplexMatrix direct = v.adjoint() * ch.apply(v * rho * v.adjoint()) * v;
    CHECK((framed.apply(rho) - direct).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("haar unitaries are unitary and reproducible") {
    ComplexMatrix u1 = random_haar_unitary(5, 77);
    ComplexMatrix u2 = random_haar_unitary(5, 77);
    CHECK((u1 - u2).norm() == 0.0);
    CHECK(is_unitary(u1, 1e-12));
    ComplexMatrix u3 = random_haar_unitary(5, 78);
    CHECK((u1 - u3).norm() > 1e-3);
}

TEST_CASE("haar unitary entry moments match the invariant measure") {
    // E|U_ij|^2 = 1/d and E|U_ij|^4 = 2/(d(d+1)).
    StreamRng rng(13);
    const Index d = 3;
    const int n = 4000;
    double m2 = 0.0;
    double m4 = 0.0;
    for (int t = 0; t < n; ++t) {
        ComplexMatrix u = random_haar_unitary(d, rng);
        double a2 = std::norm(u(0, 1));
        m2 += a2;
        m4 += a2 * a2;
    }
    m2 /= n;
    m4 /= n;
    // Variance of |U|^2 is 2/(d(d+1)) - 1/d^2; 5 sigma bands.
    double var2 = 2.0 / (d * (d + 1.0)) - 1.0 / (d * d);
    CHECK(std::abs(m2 - 1.0 / d) < 5.0 * std::sqrt(var2 / n));
    CHECK(std::abs(m4 - 2.0 / (d * (d + 1.0))) < 5.0 * std::sqrt(1.0 / n) * 0.5);
}

TEST_CASE("fourier unitary has a flat transfer profile") {
    for (Index d : {2, 3, 5, 8}) {
        ComplexMatrix f = fourier_unitary(d);
        CHECK(is_unitary(f, 1e-12));
        double expect = 1.0 / static_cast<double>(d);
        for (Index i = 0; i < d; ++i) {
            for (Index j = 0; j < d; ++j) {
                CHECK(std::norm(f(i, j)) == doctest::Approx(expect).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("random unital channels validate and mix") {
    StreamRng rng(21);
    for (Index d : {2, 4}) {
        Channel ch = random_unital_channel(d, 3, rng);
        CHECK(ch.kraus_ops().size() == 3);
        ComplexMatrix eye = ComplexMatrix::Identity(d, d);
        CHECK((ch.apply(eye) - eye).norm() < 1e-12);
        ComplexMatrix rho = random_density_matrix(d, rng);
        CHECK(ch.apply(rho).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    Channel mix = random_incoherent_mixture(3, 4, rng);
    ComplexMatrix x = random_hermitian(3, rng);
    ComplexMatrix lhs = mix.apply(dephase(x));
    ComplexMatrix rhs = dephase(mix.apply(x));
    CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("preferred basis is validated") {
    Channel h = Channel::from_unitary(hadamard());
    CHECK_FALSE(h.preferred_basis().has_value());
    h.set_preferred_basis(hadamard());
    CHECK(h.preferred_basis().has_value());
    CHECK_THROWS_AS(h.set_preferred_basis(ComplexMatrix::Ones(2, 2)), ValidationError);
    CHECK_THROWS_AS(h.set_preferred_basis(ComplexMatrix::Identity(3, 3)), DimensionMismatch);
    h.clear_preferred_basis();
    CHECK_FALSE(h.preferred_basis().has_value());
}
