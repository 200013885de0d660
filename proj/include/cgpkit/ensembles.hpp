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

#ifndef CGPKIT_ENSEMBLES_HPP
#define CGPKIT_ENSEMBLES_HPP

#include <cstdint>
#include <vector>

#include "cgpkit/coherence.hpp"

namespace cgpkit {

enum class ScmKind { haar, vertex, perm_invariant, dirichlet, empirical };

const char* scm_kind_name(ScmKind kind);
ScmKind scm_kind_from_name(const std::string& name);

struct ScmProvenance {
    ScmKind kind = ScmKind::empirical;
    double alpha = 0.0;                 // perm_invariant only
    std::vector<double> params;         // dirichlet only
    std::uint64_t n_samples = 0;        // dirichlet / empirical
    std::uint64_t seed = 0;             // dirichlet only
};

// Second-moment matrix S_ij = E[p_i p_j] of a probability-vector ensemble.
// Symmetric, PSD, entries in [0, 1], total sum exactly 1 (the p's are
// normalized). Pairs with a CoherenceMatrix through a Frobenius pairing to
// produce ensemble-averaged coherence generation.
class SimplexCorrelationMatrix {
  public:
    SimplexCorrelationMatrix(RealMatrix entries, ScmProvenance provenance,
                             double tolerance = tol::kChannel);

    const RealMatrix& entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }
    const ScmProvenance& provenance() const { return provenance_; }

  private:
    RealMatrix entries_;
    ScmProvenance provenance_;
};

// Second moments of the push-forward of the Haar measure through
// psi -> (|<i|psi>|²)_i: S_ij = (1 + delta_ij) / (d (d+1)).
SimplexCorrelationMatrix scm_haar(Index d);

// Uniform mixture of the simplex vertices: S = I / d.
SimplexCorrelationMatrix scm_vertex(Index d);

// Permutation-invariant family alpha I + (1/d - alpha) |u><u| with u the
// normalized all-ones vector; valid for 0 <= alpha <= 1/d. Every
// permutation-symmetric ensemble has an SCM of this form.
SimplexCorrelationMatrix scm_perm_invariant(Index d, double alpha);

// Empirical second moments of n_samples draws from Dirichlet(params).
SimplexCorrelationMatrix scm_dirichlet_mc(Index d, const std::vector<double>& params,
                                          std::uint64_t n_samples, std::uint64_t seed);

// Wrap an externally supplied second-moment matrix (validated).
SimplexCorrelationMatrix scm_empirical(RealMatrix entries, std::uint64_t n_samples = 0);

// Relabel the ensemble by a basis permutation: S -> P S Pᵀ.
SimplexCorrelationMatrix scm_conjugate(const SimplexCorrelationMatrix& s,
                                       const std::vector<Index>& permutation);

// Ensemble-averaged coherence generation <C, S> = sum_ij C_ij S_ij.
double cgp_ensemble(const CoherenceMatrix& c, const SimplexCorrelationMatrix& s);

// Closed form for a qubit unitary with |0| -> a|0> + b|1> column moduli
// under the symmetric two-point ensemble with weight alpha in [1/4, 1/2]:
// (2 alpha - 1/2) (2 |a| |b|)². Requires |a|² + |b|² = 1 to 1e-10. The
// equivalent perm-invariant SCM parameter is 2 alpha - 1/2.
double cgp_qubit_symmetric(Complex a, Complex b, double alpha);

// Monte Carlo mean of || q_part( ch( dephase(psi psi†) ) ) ||² over Haar
// pure states: an independent stochastic route to cgp_g for cross-checks.
MonteCarloEstimate haar_state_mc_oracle(const Channel& ch, const BasisProjectorSet& basis,
                                        std::uint64_t n_samples, std::uint64_t seed);

}  // namespace cgpkit

#endif
