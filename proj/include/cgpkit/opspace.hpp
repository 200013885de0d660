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

#ifndef CGPKIT_OPSPACE_HPP
#define CGPKIT_OPSPACE_HPP

#include "cgpkit/types.hpp"

namespace cgpkit {

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kExact);
bool is_unitary(const ComplexMatrix& m, double tolerance = tol::kExact);

// Hilbert-Schmidt inner product Tr(x† y), antilinear in the first slot.
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& x);

// An orthonormal measurement basis {|v_i>} of C^d, held as the unitary
// whose columns are the basis vectors. The computational basis is stored
// implicitly (no matrix), so frame changes against it are free.
class BasisProjectorSet {
  public:
    // Computational basis of dimension dim.
    explicit BasisProjectorSet(Index dim);

    // Basis given by the columns of basis_unitary; validated unitary.
    explicit BasisProjectorSet(ComplexMatrix basis_unitary,
                               double tolerance = tol::kExact);

    Index dim() const { return dim_; }
    bool is_computational() const { return basis_.size() == 0; }

    // The defining unitary (identity if computational).
    ComplexMatrix basis_unitary() const;

    // Rank-one projector |v_i><v_i|.
    ComplexMatrix projector(Index i) const;

    // V† X V: express an operator in this basis's frame.
    ComplexMatrix to_frame(const ComplexMatrix& x) const;

    // V X V†: inverse of to_frame.
    ComplexMatrix from_frame(const ComplexMatrix& x) const;

  private:
    Index dim_;
    ComplexMatrix basis_;  // empty when computational
};

// Pinching map sum_i P_i X P_i: kills all matrix elements between
// different basis vectors, keeps the block diagonal.
ComplexMatrix dephase(const ComplexMatrix& x, const BasisProjectorSet& basis);
ComplexMatrix dephase(const ComplexMatrix& x);

// Complement X - dephase(X): the part of X supported off the basis
// diagonal. dephase and q_part are orthogonal projections in the
// Hilbert-Schmidt sense, so ||X||² = ||dephase(X)||² + ||q_part(X)||².
ComplexMatrix q_part(const ComplexMatrix& x, const BasisProjectorSet& basis);
ComplexMatrix q_part(const ComplexMatrix& x);

struct SymmetricEigs {
    RealVector eigenvalues;   // descending
    RealMatrix eigenvectors;  // column k pairs with eigenvalues[k]
};

// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
// rotations. Deterministic, dependency-free, accurate to ~1e-14 relative
// for the d <= 16 matrices this library produces. Throws ValidationError
// if m is not symmetric within tolerance.
SymmetricEigs symmetric_eigs(const RealMatrix& m, double tolerance = tol::kExact);

double min_eigenvalue(const RealMatrix& symmetric, double tolerance = tol::kExact);
double max_eigenvalue(const RealMatrix& symmetric, double tolerance = tol::kExact);

}  // namespace cgpkit

#endif
