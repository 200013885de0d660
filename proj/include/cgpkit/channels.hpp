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

#ifndef CGPKIT_CHANNELS_HPP
#define CGPKIT_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cgpkit/opspace.hpp"
#include "cgpkit/rng.hpp"

namespace cgpkit {

// A unitary that permutes the measurement basis up to phases:
// W|i> = phases[i] |permutation[i]>. Such maps commute with dephasing.
struct IncoherentUnitarySpec {
    std::vector<Index> permutation;
    std::vector<Complex> phases;
};

// Completely positive map in Kraus form, validated trace preserving and
// unital at construction. Only unital channels are representable.
class Channel {
  public:
    // Validates sum_k K_k† K_k = I (trace preservation) and
    // sum_k K_k K_k† = I (unitality), both to `tolerance` in HS norm.
    static Channel from_kraus(std::vector<ComplexMatrix> kraus,
                              std::string label = "",
                              double tolerance = tol::kChannel);

    static Channel from_unitary(const ComplexMatrix& u,
                                std::string label = "",
                                double tolerance = tol::kExact);

    static Channel incoherent_unitary(const IncoherentUnitarySpec& spec,
                                      std::string label = "",
                                      double tolerance = tol::kExact);

    static Channel identity(Index dim);

    // Full dephasing in the computational basis (Kraus set {P_i}).
    static Channel dephasing(Index dim);

    Index dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
    const std::string& label() const { return label_; }

    bool is_unitary_channel() const { return kraus_.size() == 1; }

    // The single Kraus operator; throws UnitaryOnlyError otherwise.
    const ComplexMatrix& unitary() const;

    // rho -> sum_k K_k rho K_k†.
    ComplexMatrix apply(const ComplexMatrix& rho) const;

    // Conjugate every Kraus operator: K -> V† K V. Expresses the channel
    // in the frame where the columns of V become the computational basis.
    Channel conjugated_by(const ComplexMatrix& v) const;

    // Optional preferred measurement basis attached to the channel
    // (columns of a unitary). Consumers fall back to the computational
    // basis when absent.
    const std::optional<ComplexMatrix>& preferred_basis() const { return preferred_basis_; }
    void set_preferred_basis(ComplexMatrix basis_unitary, double tolerance = tol::kExact);
    void clear_preferred_basis() { preferred_basis_.reset(); }

  private:
    Channel() = default;

    Index dim_ = 0;
    std::vector<ComplexMatrix> kraus_;
    std::string label_;
    std::optional<ComplexMatrix> preferred_basis_;
};

// Composition a∘b: run b first, then a.
Channel compose(const Channel& a, const Channel& b);

// Tensor product acting on C^(dA·dB) with row-major index pairing
// (i_A, i_B) -> i_A * dB + i_B.
Channel tensor(const Channel& a, const Channel& b);

// Discrete Fourier transform unitary F_jk = exp(2·pi·i·j·k / d) / sqrt(d).
// Its transfer matrix is the flat matrix with every entry 1/d.
ComplexMatrix fourier_unitary(Index d);

// Haar-distributed d x d unitary: complex Ginibre matrix, QR decomposition,
// then each column of Q is rotated by the phase of the matching diagonal
// entry of R (equivalently, the unique factorization with positive-real
// R diagonal).
ComplexMatrix random_haar_unitary(Index d, StreamRng& rng);
ComplexMatrix random_haar_unitary(Index d, std::uint64_t seed);

// Mixed-unitary channel: n_kraus independent Haar unitaries with a flat
// Dirichlet weight vector, K_k = sqrt(w_k) U_k. Always unital.
Channel random_unital_channel(Index d, int n_kraus, StreamRng& rng);
Channel random_unital_channel(Index d, int n_kraus, std::uint64_t seed);

// Uniform random permutation with independent uniform phases.
IncoherentUnitarySpec random_incoherent_spec(Index d, StreamRng& rng);

// Convex mixture of n_terms random incoherent unitaries (flat Dirichlet
// weights). Commutes with dephasing, like its unitary summands.
Channel random_incoherent_mixture(Index d, int n_terms, StreamRng& rng);

ComplexMatrix random_hermitian(Index d, StreamRng& rng);

// Normalized G G† for a complex Ginibre G: full-rank random density matrix.
ComplexMatrix random_density_matrix(Index d, StreamRng& rng);

// Haar-random pure state density matrix |psi><psi|.
ComplexVector random_pure_state(Index d, StreamRng& rng);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cgpkit

#endif
