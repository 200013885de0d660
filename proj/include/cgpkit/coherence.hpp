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

#ifndef CGPKIT_COHERENCE_HPP
#define CGPKIT_COHERENCE_HPP

#include <cstdint>
#include <vector>

#include "cgpkit/assignment.hpp"
#include "cgpkit/channels.hpp"

namespace cgpkit {

// Real symmetric PSD matrix of pairwise overlaps A_ij = <F(P_i), F(P_j)>
// between channel images of the basis projectors. For unital channels the
// diagonal is <= 1 and A acts like a correlation kernel on the basis.
class GramMatrix {
  public:
    explicit GramMatrix(RealMatrix entries, double psd_slack = tol::kExact);

    const RealMatrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }

  private:
    RealMatrix entries_;
};

// Difference kernel C = A(channel) - A(dephased channel): measures how much
// basis-off-diagonal weight the channel generates from each projector pair.
// Symmetric, PSD, annihilates the uniform vector when the channel is
// unital, and has entries bounded by 1 in magnitude.
class CoherenceMatrix {
  public:
    explicit CoherenceMatrix(RealMatrix entries, double psd_slack = tol::kCross);

    const RealMatrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }

  private:
    RealMatrix entries_;
};

// Doubly stochastic matrix X_ij = |<i|U|j>|² of basis-population transfer
// probabilities of a unitary.
class TransferMatrix {
  public:
    explicit TransferMatrix(RealMatrix entries, double tolerance = tol::kExact);

    const RealMatrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }

  private:
    RealMatrix entries_;
};

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

// Overlap matrix of the projector images under ch, computed directly from
// Hilbert-Schmidt inner products. Imaginary parts must vanish (checked to
// 1e-10); entries are the real parts.
GramMatrix gram_matrix(const Channel& ch, const BasisProjectorSet& basis);

// Same matrix evaluated through the two-copy route: each entry is the
// expectation of the swap operator on F(P_i) ⊗ F(P_j). Quadratically more
// expensive (guarded to d <= 16); exists as an independent cross-check of
// gram_matrix and must agree with it to 1e-8.
GramMatrix gram_matrix_swap_protocol(const Channel& ch, const BasisProjectorSet& basis);

// Coherence kernel of a channel. Evaluates both equivalent forms, the Gram
// matrix of the off-diagonal parts of the projector images and the
// difference of the full and dephased Gram matrices, checks they agree to
// 1e-9, and returns the first (which is PSD by construction).
CoherenceMatrix coherence_matrix(const Channel& ch, const BasisProjectorSet& basis);
CoherenceMatrix coherence_matrix(const Channel& ch);

TransferMatrix transfer_matrix(const ComplexMatrix& u, const BasisProjectorSet& basis);
TransferMatrix transfer_matrix(const ComplexMatrix& u);

// For unitary channels the coherence kernel reduces to I - XᵀX.
CoherenceMatrix coherence_matrix_unitary(const TransferMatrix& x);

// Trace norm of the coherence kernel. PSD, so this equals the plain trace;
// ranges over [0, d-1], with the maximum attained by Fourier-like unitaries.
double cgp_trace_norm(const CoherenceMatrix& c);

// Largest eigenvalue of the coherence kernel.
double cgp_operator_norm(const CoherenceMatrix& c);

struct PermutationDistanceResult {
    double value = 0.0;
    // Witness: the closest permutation, as column -> row.
    std::vector<Index> permutation;
};

// Squared Frobenius distance min_sigma ||X - P_sigma||² from the transfer
// matrix to the permutation matrices, solved exactly as an assignment:
// ||X||² + d - 2 max_sigma sum_l X(sigma(l), l). Zero iff the unitary is
// incoherent; witness ties break to the lexicographically smallest sigma.
PermutationDistanceResult cgp_permutation_distance(const TransferMatrix& x);

// Monte Carlo estimate of the mean off-diagonal Hilbert-Schmidt norm
// generated from dephased Haar-random pure inputs:
// E_psi || q_part( U diag(p(psi)) U† ) ||. Reported with the standard
// error of the mean. Defined for unitary channels.
MonteCarloEstimate cgp_geometric_f(const Channel& ch, const BasisProjectorSet& basis,
                                   std::uint64_t n_samples, std::uint64_t seed);

// Trace-norm measure rescaled by the Haar second moment of the simplex:
// cgp_trace_norm / (d (d+1)). Equals the exact Haar average of
// || q_part(ch(dephase(psi))) ||² over pure states.
double cgp_g(const Channel& ch, const BasisProjectorSet& basis);

// Minimum over incoherent unitaries W of the Haar-averaged squared
// Hilbert-Schmidt distance E_psi || (W - U) applied to dephased psi ||².
// Phases cancel on diagonal inputs, so the minimization is over
// permutations only and reduces to the same assignment as
// cgp_permutation_distance: value = 2 (d - total_weight) / (d (d+1)).
double cgp_geometric_min(const ComplexMatrix& u, const BasisProjectorSet& basis);

}  // namespace cgpkit

#endif
