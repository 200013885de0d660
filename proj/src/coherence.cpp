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

#include "cgpkit/coherence.hpp"

#include <cmath>
#include <sstream>

namespace cgpkit {

namespace {

void check_symmetric(const RealMatrix& m, double tolerance, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ValidationError(std::string(what) + ": matrix must be square");
    }
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tolerance) {
        throw ValidationError(std::string(what) + ": matrix is not symmetric");
    }
}

void check_psd(const RealMatrix& m, double slack, const char* what) {
    double lambda_min = min_eigenvalue(m, 1e-8);
    if (lambda_min < -slack) {
        std::ostringstream msg;
        msg << what << ": matrix is not PSD (min eigenvalue " << lambda_min << ")";
        throw ValidationError(msg.str());
    }
}

// Channel expressed in the frame of the requested basis, so that all
// downstream formulas are pure index arithmetic on the computational basis.
Channel in_basis_frame(const Channel& ch, const BasisProjectorSet& basis) {
    if (ch.dim() != basis.dim()) {
        throw DimensionMismatch("coherence: channel and basis dimensions differ");
    }
    if (basis.is_computational()) {
        return ch;
    }
    return ch.conjugated_by(basis.basis_unitary());
}

// Images F(P_i) of the computational projectors: sum_k K_k P_i K_k† is the
// sum of outer products of the i-th Kraus columns.
std::vector<ComplexMatrix> projector_images(const Channel& ch) {
    const Index d = ch.dim();
    std::vector<ComplexMatrix> images(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        ComplexMatrix f = ComplexMatrix::Zero(d, d);
        for (const auto& k : ch.kraus_ops()) {
            f += k.col(i) * k.col(i).adjoint();
        }
        images[static_cast<std::size_t>(i)] = std::move(f);
    }
    return images;
}

RealMatrix overlap_matrix(const std::vector<ComplexMatrix>& images) {
    const auto d = static_cast<Index>(images.size());
    RealMatrix g(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = i; j < d; ++j) {
            Complex z = hs_inner(images[static_cast<std::size_t>(i)],
                                 images[static_cast<std::size_t>(j)]);
            if (std::abs(z.imag()) > 1e-10) {
                throw ValidationError("gram_matrix: overlap has non-negligible imaginary part");
            }
            g(i, j) = z.real();
            g(j, i) = z.real();
        }
    }
    return g;
}

}  // namespace

GramMatrix::GramMatrix(RealMatrix entries, double psd_slack)
    : entries_(std::move(entries)) {
    check_symmetric(entries_, 1e-10, "GramMatrix");
    check_psd(entries_, psd_slack, "GramMatrix");
}

CoherenceMatrix::CoherenceMatrix(RealMatrix entries, double psd_slack)
    : entries_(std::move(entries)) {
    check_symmetric(entries_, 1e-10, "CoherenceMatrix");
    check_psd(entries_, psd_slack, "CoherenceMatrix");
    if (entries_.cwiseAbs().maxCoeff() > 1.0 + 1e-8) {
        throw ValidationError("CoherenceMatrix: entries exceed 1 in magnitude");
    }
}

TransferMatrix::TransferMatrix(RealMatrix entries, double tolerance)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw ValidationError("TransferMatrix: matrix must be square");
    }
    if (entries_.minCoeff() < -tolerance || entries_.maxCoeff() > 1.0 + tolerance) {
        throw ValidationError("TransferMatrix: entries must lie in [0, 1]");
    }
    const Index d = entries_.rows();
    for (Index i = 0; i < d; ++i) {
        if (std::abs(entries_.row(i).sum() - 1.0) > tolerance ||
            std::abs(entries_.col(i).sum() - 1.0) > tolerance) {
            throw ValidationError("TransferMatrix: matrix is not doubly stochastic");
        }
    }
}

GramMatrix gram_matrix(const Channel& ch, const BasisProjectorSet& basis) {
    Channel framed = in_basis_frame(ch, basis);
    return GramMatrix(overlap_matrix(projector_images(framed)));
}

GramMatrix gram_matrix_swap_protocol(const Channel& ch, const BasisProjectorSet& basis) {
    if (ch.dim() > 16) {
        throw ValidationError(
            "gram_matrix_swap_protocol: d > 16 (two-copy route scales as d^4; "
            "use gram_matrix)");
    }
    Channel framed = in_basis_frame(ch, basis);
    const Index d = framed.dim();
    std::vector<ComplexMatrix> images = projector_images(framed);

    // Swap operator on C^d ⊗ C^d with the row-major pairing.
    ComplexMatrix swap = ComplexMatrix::Zero(d * d, d * d);
    for (Index a = 0; a < d; ++a) {
        for (Index b = 0; b < d; ++b) {
            swap(a * d + b, b * d + a) = 1.0;
        }
    }

    RealMatrix g(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            Complex z = (swap * kron(images[static_cast<std::size_t>(i)],
                                     images[static_cast<std::size_t>(j)]))
                            .trace();
            if (std::abs(z.imag()) > 1e-10) {
                throw ValidationError(
                    "gram_matrix_swap_protocol: trace has non-negligible imaginary part");
            }
            g(i, j) = z.real();
        }
    }
    // Symmetrize away round-off before validation.
    RealMatrix sym = 0.5 * (g + g.transpose());
    if ((g - sym).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("gram_matrix_swap_protocol: result is not symmetric");
    }
    return GramMatrix(std::move(sym));
}

CoherenceMatrix coherence_matrix(const Channel& ch, const BasisProjectorSet& basis) {
    Channel framed = in_basis_frame(ch, basis);
    const Index d = framed.dim();
    std::vector<ComplexMatrix> images = projector_images(framed);

    // Route 1: Gram matrix of the off-diagonal parts of the images.
    std::vector<ComplexMatrix> off_parts(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        off_parts[static_cast<std::size_t>(i)] = q_part(images[static_cast<std::size_t>(i)]);
    }
    RealMatrix direct = overlap_matrix(off_parts);

    // Route 2: full Gram minus the Gram of the dephased images. The
    // dephased images are diagonal, so their overlaps are dot products of
    // the (real) diagonals.
    RealMatrix full = overlap_matrix(images);
    RealMatrix diagonals(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index k = 0; k < d; ++k) {
            Complex v = images[static_cast<std::size_t>(i)](k, k);
            if (std::abs(v.imag()) > 1e-10) {
                throw ValidationError("coherence_matrix: projector image has complex diagonal");
            }
            diagonals(k, i) = v.real();
        }
    }
    RealMatrix difference = full - diagonals.transpose() * diagonals;

    if ((direct - difference).cwiseAbs().maxCoeff() > tol::kCross) {
        throw ValidationError(
            "coherence_matrix: direct and difference evaluations disagree beyond 1e-9");
    }
    return CoherenceMatrix(direct);
}

CoherenceMatrix coherence_matrix(const Channel& ch) {
    return coherence_matrix(ch, BasisProjectorSet(ch.dim()));
}

TransferMatrix transfer_matrix(const ComplexMatrix& u, const BasisProjectorSet& basis) {
    if (!is_unitary(u)) {
        throw ValidationError("transfer_matrix: matrix is not unitary");
    }
    if (u.rows() != basis.dim()) {
        throw DimensionMismatch("transfer_matrix: matrix and basis dimensions differ");
    }
    ComplexMatrix framed = basis.to_frame(u);
    return TransferMatrix(framed.cwiseAbs2());
}

TransferMatrix transfer_matrix(const ComplexMatrix& u) {
    return transfer_matrix(u, BasisProjectorSet(u.rows()));
}

CoherenceMatrix coherence_matrix_unitary(const TransferMatrix& x) {
    const Index d = x.dim();
    RealMatrix c = RealMatrix::Identity(d, d) - x.entries().transpose() * x.entries();
    return CoherenceMatrix(0.5 * (c + c.transpose()), 1e-8);
}

double cgp_trace_norm(const CoherenceMatrix& c) {
    // PSD: the trace norm is the trace itself. Clamp the tiny negative
    // round-off an exactly incoherent channel can produce.
    double t = c.entries().trace();
    return (t < 0.0 && t > -1e-12) ? 0.0 : t;
}

double cgp_operator_norm(const CoherenceMatrix& c) {
    double m = max_eigenvalue(c.entries(), 1e-8);
    return (m < 0.0 && m > -1e-12) ? 0.0 : m;
}

PermutationDistanceResult cgp_permutation_distance(const TransferMatrix& x) {
    AssignmentResult best = max_assignment(x.entries());
    PermutationDistanceResult out;
    out.permutation = best.permutation;
    out.value = x.entries().squaredNorm() + static_cast<double>(x.dim()) -
                2.0 * best.total_weight;
    return out;
}

MonteCarloEstimate cgp_geometric_f(const Channel& ch, const BasisProjectorSet& basis,
                                   std::uint64_t n_samples, std::uint64_t seed) {
    if (!ch.is_unitary_channel()) {
        throw UnitaryOnlyError("cgp_geometric_f: defined for unitary channels only");
    }
    if (n_samples == 0) {
        throw ValidationError("cgp_geometric_f: n_samples must be positive");
    }
    Channel framed = in_basis_frame(ch, basis);
    const ComplexMatrix& u = framed.unitary();
    const Index d = framed.dim();

    StreamRng rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        ComplexVector psi = random_pure_state(d, rng);
        // Dephased input is diag(p); its image is U diag(p) U†.
        ComplexVector p = psi.cwiseAbs2().cast<Complex>();
        ComplexMatrix out = u * p.asDiagonal() * u.adjoint();
        double off_sq = out.squaredNorm() - out.diagonal().squaredNorm();
        double val = std::sqrt(std::max(0.0, off_sq));
        sum += val;
        sum_sq += val * val;
    }
    const auto n = static_cast<double>(n_samples);
    double mean = sum / n;
    double var = 0.0;
    if (n_samples > 1) {
        var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    }
    MonteCarloEstimate est;
    est.value = mean;
    est.std_error = std::sqrt(var / n);
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

double cgp_g(const Channel& ch, const BasisProjectorSet& basis) {
    const auto d = static_cast<double>(ch.dim());
    return cgp_trace_norm(coherence_matrix(ch, basis)) / (d * (d + 1.0));
}

double cgp_geometric_min(const ComplexMatrix& u, const BasisProjectorSet& basis) {
    TransferMatrix x = transfer_matrix(u, basis);
    AssignmentResult best = max_assignment(x.entries());
    const auto d = static_cast<double>(x.dim());
    double value = 2.0 * (d - best.total_weight) / (d * (d + 1.0));
    return std::max(0.0, value);
}

}  // namespace cgpkit
