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

#include "cgpkit/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace cgpkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_square_same_dim(const std::vector<ComplexMatrix>& kraus) {
    if (kraus.empty()) {
        throw ValidationError("Channel: Kraus list must be nonempty");
    }
    const Index d = kraus.front().rows();
    if (d < 1) {
        throw ValidationError("Channel: dimension must be >= 1");
    }
    for (const auto& k : kraus) {
        if (k.rows() != d || k.cols() != d) {
            throw DimensionMismatch("Channel: Kraus operators must be square with equal dimension");
        }
    }
}

}  // namespace

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus, std::string label,
                            double tolerance) {
    check_square_same_dim(kraus);
    const Index d = kraus.front().rows();
    ComplexMatrix tp = ComplexMatrix::Zero(d, d);
    ComplexMatrix un = ComplexMatrix::Zero(d, d);
    for (const auto& k : kraus) {
        tp += k.adjoint() * k;
        un += k * k.adjoint();
    }
    const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
    double tp_err = (tp - eye).norm();
    if (tp_err > tolerance) {
        std::ostringstream msg;
        msg << "Channel: Kraus set is not trace preserving (||sum K†K - I|| = " << tp_err
            << ", tolerance " << tolerance << ")";
        throw ValidationError(msg.str());
    }
    double un_err = (un - eye).norm();
    if (un_err > tolerance) {
        std::ostringstream msg;
        msg << "Channel: channel is not unital (||sum K K† - I|| = " << un_err
            << ", tolerance " << tolerance
            << "); only unital channels are supported";
        throw NotUnitalError(msg.str());
    }
    Channel ch;
    ch.dim_ = d;
    ch.kraus_ = std::move(kraus);
    ch.label_ = std::move(label);
    return ch;
}

Channel Channel::from_unitary(const ComplexMatrix& u, std::string label,
                              double tolerance) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw ValidationError("Channel::from_unitary: matrix must be square");
    }
    if (!is_unitary(u, tolerance)) {
        throw ValidationError("Channel::from_unitary: matrix is not unitary within tolerance");
    }
    Channel ch;
    ch.dim_ = u.rows();
    ch.kraus_ = {u};
    ch.label_ = std::move(label);
    return ch;
}

Channel Channel::incoherent_unitary(const IncoherentUnitarySpec& spec,
                                    std::string label, double tolerance) {
    const auto d = static_cast<Index>(spec.permutation.size());
    if (d < 1 || spec.phases.size() != spec.permutation.size()) {
        throw ValidationError("incoherent_unitary: permutation and phases must have equal, positive length");
    }
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    for (Index i = 0; i < d; ++i) {
        Index target = spec.permutation[static_cast<std::size_t>(i)];
        if (target < 0 || target >= d || seen[static_cast<std::size_t>(target)]) {
            throw ValidationError("incoherent_unitary: permutation is not a bijection on {0..d-1}");
        }
        seen[static_cast<std::size_t>(target)] = 1;
        if (std::abs(std::abs(spec.phases[static_cast<std::size_t>(i)]) - 1.0) > tolerance) {
            throw ValidationError("incoherent_unitary: phases must have unit modulus");
        }
    }
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        w(spec.permutation[static_cast<std::size_t>(i)], i) =
            spec.phases[static_cast<std::size_t>(i)];
    }
    return from_unitary(w, std::move(label), tolerance);
}

Channel Channel::identity(Index dim) {
    return from_unitary(ComplexMatrix::Identity(dim, dim), "identity");
}

Channel Channel::dephasing(Index dim) {
    if (dim < 1) {
        throw ValidationError("Channel::dephasing: dimension must be >= 1");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(dim));
    for (Index i = 0; i < dim; ++i) {
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        p(i, i) = 1.0;
        kraus.push_back(std::move(p));
    }
    return from_kraus(std::move(kraus), "dephasing");
}

const ComplexMatrix& Channel::unitary() const {
    if (!is_unitary_channel()) {
        throw UnitaryOnlyError("Channel::unitary: channel has more than one Kraus operator");
    }
    return kraus_.front();
}

ComplexMatrix Channel::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw DimensionMismatch("Channel::apply: input has wrong shape");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& k : kraus_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Channel Channel::conjugated_by(const ComplexMatrix& v) const {
    if (!is_unitary(v)) {
        throw ValidationError("Channel::conjugated_by: frame matrix is not unitary");
    }
    if (v.rows() != dim_) {
        throw DimensionMismatch("Channel::conjugated_by: frame matrix has wrong dimension");
    }
    Channel ch;
    ch.dim_ = dim_;
    ch.kraus_.reserve(kraus_.size());
    for (const auto& k : kraus_) {
        ch.kraus_.push_back(v.adjoint() * k * v);
    }
    ch.label_ = label_;
    return ch;
}

void Channel::set_preferred_basis(ComplexMatrix basis_unitary, double tolerance) {
    if (basis_unitary.rows() != dim_ || basis_unitary.cols() != dim_) {
        throw DimensionMismatch("Channel::set_preferred_basis: wrong shape");
    }
    if (!is_unitary(basis_unitary, tolerance)) {
        throw ValidationError("Channel::set_preferred_basis: basis matrix is not unitary");
    }
    preferred_basis_ = std::move(basis_unitary);
}

Channel compose(const Channel& a, const Channel& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("compose: channel dimensions differ");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus_ops().size() * b.kraus_ops().size());
    for (const auto& ka : a.kraus_ops()) {
        for (const auto& kb : b.kraus_ops()) {
            kraus.push_back(ka * kb);
        }
    }
    std::string label;
    if (!a.label().empty() || !b.label().empty()) {
        label = a.label() + " after " + b.label();
    }
    return Channel::from_kraus(std::move(kraus), std::move(label));
}

Channel tensor(const Channel& a, const Channel& b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus_ops().size() * b.kraus_ops().size());
    for (const auto& ka : a.kraus_ops()) {
        for (const auto& kb : b.kraus_ops()) {
            kraus.push_back(kron(ka, kb));
        }
    }
    std::string label;
    if (!a.label().empty() || !b.label().empty()) {
        label = a.label() + " x " + b.label();
    }
    return Channel::from_kraus(std::move(kraus), std::move(label));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix fourier_unitary(Index d) {
    if (d < 1) {
        throw ValidationError("fourier_unitary: dimension must be >= 1");
    }
    ComplexMatrix f(d, d);
    const double base = kTwoPi / static_cast<double>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index j = 0; j < d; ++j) {
        for (Index k = 0; k < d; ++k) {
            // Reduce j*k mod d before taking the angle to keep phases exact
            // for large indices.
            double angle = base * static_cast<double>((j * k) % d);
            f(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
        }
    }
    return f;
}

ComplexMatrix random_haar_unitary(Index d, StreamRng& rng) {
    if (d < 1) {
        throw ValidationError("random_haar_unitary: dimension must be >= 1");
    }
    ComplexMatrix g(d, d);
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        double mag = std::abs(rjj);
        q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
    }
    return q;
}

ComplexMatrix random_haar_unitary(Index d, std::uint64_t seed) {
    StreamRng rng(seed);
    return random_haar_unitary(d, rng);
}

Channel random_unital_channel(Index d, int n_kraus, StreamRng& rng) {
    if (n_kraus < 1) {
        throw ValidationError("random_unital_channel: need at least one Kraus operator");
    }
    std::vector<double> weights =
        rng.dirichlet(std::vector<double>(static_cast<std::size_t>(n_kraus), 1.0));
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(n_kraus));
    for (int k = 0; k < n_kraus; ++k) {
        kraus.push_back(std::sqrt(weights[static_cast<std::size_t>(k)]) *
                        random_haar_unitary(d, rng));
    }
    return Channel::from_kraus(std::move(kraus), "random_unital");
}

Channel random_unital_channel(Index d, int n_kraus, std::uint64_t seed) {
    StreamRng rng(seed);
    return random_unital_channel(d, n_kraus, rng);
}

IncoherentUnitarySpec random_incoherent_spec(Index d, StreamRng& rng) {
    IncoherentUnitarySpec spec;
    spec.permutation = rng.permutation(d);
    spec.phases.reserve(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        double theta = kTwoPi * rng.uniform();
        spec.phases.emplace_back(std::cos(theta), std::sin(theta));
    }
    return spec;
}

Channel random_incoherent_mixture(Index d, int n_terms, StreamRng& rng) {
    if (n_terms < 1) {
        throw ValidationError("random_incoherent_mixture: need at least one term");
    }
    std::vector<double> weights =
        rng.dirichlet(std::vector<double>(static_cast<std::size_t>(n_terms), 1.0));
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(n_terms));
    for (int k = 0; k < n_terms; ++k) {
        Channel w = Channel::incoherent_unitary(random_incoherent_spec(d, rng));
        kraus.push_back(std::sqrt(weights[static_cast<std::size_t>(k)]) * w.unitary());
    }
    return Channel::from_kraus(std::move(kraus), "incoherent_mixture");
}

ComplexMatrix random_hermitian(Index d, StreamRng& rng) {
    ComplexMatrix g(d, d);
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_density_matrix(Index d, StreamRng& rng) {
    ComplexMatrix g(d, d);
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

ComplexVector random_pure_state(Index d, StreamRng& rng) {
    ComplexVector psi(d);
    for (Index i = 0; i < d; ++i) {
        psi(i) = Complex(rng.gaussian(), rng.gaussian());
    }
    psi /= psi.norm();
    return psi;
}

}  // namespace cgpkit
