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

#include "cgpkit/additive.hpp"

#include <cmath>
#include <limits>

namespace cgpkit {

namespace {

constexpr double kClampFloor = -1e-12;
constexpr double kSupportThreshold = 1e-12;

RealVector clamp_probs(RealVector p) {
    for (Index i = 0; i < p.size(); ++i) {
        if (p(i) < kClampFloor) {
            throw ValidationError("ColumnDistribution: entry below -1e-12");
        }
        if (p(i) < 0.0) {
            p(i) = 0.0;
        }
    }
    if (std::abs(p.sum() - 1.0) > 1e-10) {
        throw ValidationError("ColumnDistribution: entries do not sum to 1");
    }
    return p;
}

RealVector checked_column(const TransferMatrix& x, Index column) {
    if (column < 0 || column >= x.dim()) {
        throw DimensionMismatch("ColumnDistribution: column index out of range");
    }
    return x.entries().col(column);
}

}  // namespace

ColumnDistribution::ColumnDistribution(const TransferMatrix& x, Index column)
    : probs_(clamp_probs(checked_column(x, column))) {}

ColumnDistribution::ColumnDistribution(RealVector probs)
    : probs_(clamp_probs(std::move(probs))) {}

double ColumnDistribution::shannon_entropy() const {
    double h = 0.0;
    for (Index i = 0; i < probs_.size(); ++i) {
        double p = probs_(i);
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

double ColumnDistribution::renyi_entropy(double alpha) const {
    if (alpha < 0.0 || alpha > 2.0) {
        throw ValidationError("renyi_entropy: alpha must lie in [0, 2]");
    }
    if (alpha == 0.0) {
        Index support = 0;
        for (Index i = 0; i < probs_.size(); ++i) {
            if (probs_(i) > kSupportThreshold) {
                ++support;
            }
        }
        return std::log(static_cast<double>(support));
    }
    if (std::abs(alpha - 1.0) < 1e-9) {
        return shannon_entropy();
    }
    double s = 0.0;
    for (Index i = 0; i < probs_.size(); ++i) {
        double p = probs_(i);
        if (p > 0.0) {
            s += std::pow(p, alpha);
        }
    }
    return std::log(s) / (1.0 - alpha);
}

double phi_p(const TransferMatrix& x) {
    const auto d = static_cast<double>(x.dim());
    return -std::log(x.entries().squaredNorm() / d);
}

double phi_g(const TransferMatrix& x) {
    // Log-magnitude of the determinant from the LU pivots, accumulated in
    // log space so near-singular matrices degrade to +infinity instead of
    // losing precision through an underflowed product.
    Eigen::PartialPivLU<RealMatrix> lu(x.entries());
    double log_abs_det = 0.0;
    for (Index i = 0; i < x.dim(); ++i) {
        double pivot = std::abs(lu.matrixLU()(i, i));
        if (pivot == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        log_abs_det += std::log(pivot);
    }
    if (log_abs_det < std::log(kDetFloor)) {
        return std::numeric_limits<double>::infinity();
    }
    return -log_abs_det / static_cast<double>(x.dim());
}

double phi_g_tilde(const TransferMatrix& x) {
    double total = 0.0;
    for (Index j = 0; j < x.dim(); ++j) {
        total += ColumnDistribution(x, j).shannon_entropy();
    }
    return total / static_cast<double>(x.dim());
}

double phi_alpha(const TransferMatrix& x, double alpha) {
    double total = 0.0;
    for (Index j = 0; j < x.dim(); ++j) {
        total += ColumnDistribution(x, j).renyi_entropy(alpha);
    }
    return total / static_cast<double>(x.dim());
}

}  // namespace cgpkit
