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

#include "cgpkit/opspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cgpkit {

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).norm() <= tolerance;
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix gram = m.adjoint() * m;
    gram -= ComplexMatrix::Identity(m.rows(), m.cols());
    return gram.norm() <= tolerance;
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw DimensionMismatch("hs_inner: operand shapes differ");
    }
    return x.conjugate().cwiseProduct(y).sum();
}

double hs_norm(const ComplexMatrix& x) { return x.norm(); }

BasisProjectorSet::BasisProjectorSet(Index dim) : dim_(dim) {
    if (dim < 1) {
        throw ValidationError("BasisProjectorSet: dimension must be >= 1");
    }
}

BasisProjectorSet::BasisProjectorSet(ComplexMatrix basis_unitary, double tolerance)
    : dim_(basis_unitary.rows()), basis_(std::move(basis_unitary)) {
    if (dim_ < 1 || basis_.rows() != basis_.cols()) {
        throw ValidationError("BasisProjectorSet: basis matrix must be square");
    }
    if (!is_unitary(basis_, tolerance)) {
        throw ValidationError("BasisProjectorSet: basis matrix is not unitary");
    }
    if (basis_.isIdentity(tolerance)) {
        basis_.resize(0, 0);  // treat as computational
    }
}

ComplexMatrix BasisProjectorSet::basis_unitary() const {
    if (is_computational()) {
        return ComplexMatrix::Identity(dim_, dim_);
    }
    return basis_;
}

ComplexMatrix BasisProjectorSet::projector(Index i) const {
    if (i < 0 || i >= dim_) {
        throw DimensionMismatch("BasisProjectorSet::projector: index out of range");
    }
    ComplexMatrix p = ComplexMatrix::Zero(dim_, dim_);
    if (is_computational()) {
        p(i, i) = 1.0;
    } else {
        p = basis_.col(i) * basis_.col(i).adjoint();
    }
    return p;
}

ComplexMatrix BasisProjectorSet::to_frame(const ComplexMatrix& x) const {
    if (x.rows() != dim_ || x.cols() != dim_) {
        throw DimensionMismatch("BasisProjectorSet::to_frame: operator has wrong shape");
    }
    if (is_computational()) {
        return x;
    }
    return basis_.adjoint() * x * basis_;
}

ComplexMatrix BasisProjectorSet::from_frame(const ComplexMatrix& x) const {
    if (x.rows() != dim_ || x.cols() != dim_) {
        throw DimensionMismatch("BasisProjectorSet::from_frame: operator has wrong shape");
    }
    if (is_computational()) {
        return x;
    }
    return basis_ * x * basis_.adjoint();
}

namespace {

ComplexMatrix keep_diagonal(const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    out.diagonal() = x.diagonal();
    return out;
}

}  // namespace

ComplexMatrix dephase(const ComplexMatrix& x, const BasisProjectorSet& basis) {
    if (x.rows() != basis.dim() || x.cols() != basis.dim()) {
        throw DimensionMismatch("dephase: operator does not match basis dimension");
    }
    if (basis.is_computational()) {
        return keep_diagonal(x);
    }
    return basis.from_frame(keep_diagonal(basis.to_frame(x)));
}

ComplexMatrix dephase(const ComplexMatrix& x) {
    if (x.rows() != x.cols()) {
        throw DimensionMismatch("dephase: operator must be square");
    }
    return keep_diagonal(x);
}

ComplexMatrix q_part(const ComplexMatrix& x, const BasisProjectorSet& basis) {
    return x - dephase(x, basis);
}

ComplexMatrix q_part(const ComplexMatrix& x) { return x - dephase(x); }

SymmetricEigs symmetric_eigs(const RealMatrix& m, double tolerance) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ValidationError("symmetric_eigs: matrix must be square");
    }
    const Index n = m.rows();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tolerance) {
        throw ValidationError("symmetric_eigs: matrix is not symmetric within tolerance");
    }

    RealMatrix a = 0.5 * (m + m.transpose());
    RealMatrix v = RealMatrix::Identity(n, n);
    const double stop = 1e-14 * std::max(1.0, a.norm());

    for (int sweep = 0; sweep < 100 && n > 1; ++sweep) {
        double off = 0.0;
        for (Index p = 0; p < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                off += 2.0 * a(p, q) * a(p, q);
            }
        }
        if (std::sqrt(off) <= stop) {
            break;
        }
        for (Index p = 0; p < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                // Smaller-angle root of t^2 + 2t*theta - 1 = 0.
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                double app = a(p, p);
                double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Index k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(p, k) = a(k, p);
                    a(k, q) = s * akp + c * akq;
                    a(q, k) = a(k, q);
                }
                for (Index k = 0; k < n; ++k) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](Index i, Index j) { return a(i, i) > a(j, j); });

    SymmetricEigs out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = a(src, src);
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

double min_eigenvalue(const RealMatrix& symmetric, double tolerance) {
    SymmetricEigs e = symmetric_eigs(symmetric, tolerance);
    return e.eigenvalues(e.eigenvalues.size() - 1);
}

double max_eigenvalue(const RealMatrix& symmetric, double tolerance) {
    return symmetric_eigs(symmetric, tolerance).eigenvalues(0);
}

}  // namespace cgpkit
