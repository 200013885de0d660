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

#ifndef CGPKIT_ADDITIVE_HPP
#define CGPKIT_ADDITIVE_HPP

#include "cgpkit/coherence.hpp"

namespace cgpkit {

// Additive (logarithmic) coherence measures of a unitary's transfer
// matrix. All of them: vanish iff the transfer matrix is a permutation,
// are invariant under pre/post composition with incoherent unitaries, add
// over tensor products, and attain their common maximum log d on
// Fourier-like matrices with all entries 1/d.

// |det X| underflow guard: below this the log-determinant measure is
// reported as +infinity.
inline constexpr double kDetFloor = 1e-300;

// A column of a transfer matrix as a probability distribution. Entries
// are clamped to 0 from round-off as low as -1e-12 (anything lower
// throws) and must sum to 1 within 1e-10.
class ColumnDistribution {
  public:
    ColumnDistribution(const TransferMatrix& x, Index column);
    explicit ColumnDistribution(RealVector probs);

    const RealVector& probs() const { return probs_; }
    Index dim() const { return probs_.size(); }

    // Shannon entropy with the 0·log 0 := 0 convention.
    double shannon_entropy() const;

    // Order-alpha entropy, alpha in [0, 2]. alpha = 0 counts the support
    // (entries above 1e-12); |alpha - 1| < 1e-9 routes to the exact
    // Shannon branch instead of the removable singularity.
    double renyi_entropy(double alpha) const;

  private:
    RealVector probs_;
};

// -log(||X||_F² / d): purity-based measure.
double phi_p(const TransferMatrix& x);

// -(1/d) log |det X|: +infinity when X is singular (|det| < kDetFloor).
double phi_g(const TransferMatrix& x);

// Mean Shannon entropy of the columns.
double phi_g_tilde(const TransferMatrix& x);

// Mean order-alpha entropy of the columns; alpha in [0, 2]. Decreasing in
// alpha; phi_alpha(X, 1) = phi_g_tilde(X) and phi_alpha(X, 2) = phi_p-like
// column-wise purity entropy.
double phi_alpha(const TransferMatrix& x, double alpha);

}  // namespace cgpkit

#endif
