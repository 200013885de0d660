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

#include "cgpkit/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cgpkit {

namespace {

double column_order_sum(const RealMatrix& w, const std::vector<Index>& sigma) {
    double total = 0.0;
    for (Index l = 0; l < w.cols(); ++l) {
        total += w(sigma[static_cast<std::size_t>(l)], l);
    }
    return total;
}

// Minimum-cost perfect matching via shortest augmenting paths with dual
// potentials. Returns row_of_col. Classic O(n^3) formulation; internal
// arrays are 1-based with column 0 as the virtual source.
std::vector<Index> min_cost_matching(const RealMatrix& cost) {
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    continue;
                }
                double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                             v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<Index> row_of_col(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        row_of_col[static_cast<std::size_t>(j - 1)] =
            static_cast<Index>(p[static_cast<std::size_t>(j)] - 1);
    }
    return row_of_col;
}

std::vector<Index> max_matching(const RealMatrix& weights) {
    double shift = weights.maxCoeff();
    RealMatrix cost = RealMatrix::Constant(weights.rows(), weights.cols(), shift) - weights;
    return min_cost_matching(cost);
}

void validate_weights(const RealMatrix& weights) {
    if (weights.rows() != weights.cols() || weights.rows() < 1) {
        throw ValidationError("assignment: weight matrix must be square and nonempty");
    }
    if (!weights.allFinite()) {
        throw ValidationError("assignment: weight entries must be finite");
    }
}

}  // namespace

AssignmentResult max_assignment(const RealMatrix& weights) {
    validate_weights(weights);
    const Index n = weights.rows();
    std::vector<Index> sigma = max_matching(weights);
    double opt = column_order_sum(weights, sigma);

    // Canonicalize to the lexicographically smallest optimal permutation.
    // Scan columns left to right; for each, try every smaller unused row
    // and keep it whenever the best completion ties the incumbent (direct
    // re-summation, so floating-point comparisons are exact, not
    // shift-relative).
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    double prefix = 0.0;
    for (Index l = 0; l < n; ++l) {
        for (Index r = 0; r < sigma[static_cast<std::size_t>(l)]; ++r) {
            if (used[static_cast<std::size_t>(r)]) {
                continue;
            }
            // Upper bound: prefix + this entry + per-column maxima over the
            // rows that would remain free. Prunes most candidates.
            double bound = prefix + weights(r, l);
            for (Index l2 = l + 1; l2 < n; ++l2) {
                double best = -std::numeric_limits<double>::infinity();
                for (Index r2 = 0; r2 < n; ++r2) {
                    if (used[static_cast<std::size_t>(r2)] || r2 == r) {
                        continue;
                    }
                    best = std::max(best, weights(r2, l2));
                }
                bound += best;
            }
            if (bound < opt) {
                continue;
            }

            std::vector<Index> candidate = sigma;
            candidate[static_cast<std::size_t>(l)] = r;
            const Index m = n - l - 1;
            if (m > 0) {
                std::vector<Index> free_rows;
                free_rows.reserve(static_cast<std::size_t>(m));
                for (Index r2 = 0; r2 < n; ++r2) {
                    if (!used[static_cast<std::size_t>(r2)] && r2 != r) {
                        free_rows.push_back(r2);
                    }
                }
                RealMatrix sub(m, m);
                for (Index a = 0; a < m; ++a) {
                    for (Index b = 0; b < m; ++b) {
                        sub(a, b) = weights(free_rows[static_cast<std::size_t>(a)], l + 1 + b);
                    }
                }
                std::vector<Index> sub_sigma = max_matching(sub);
                for (Index b = 0; b < m; ++b) {
                    candidate[static_cast<std::size_t>(l + 1 + b)] =
                        free_rows[static_cast<std::size_t>(sub_sigma[static_cast<std::size_t>(b)])];
                }
            }
            double total = column_order_sum(weights, candidate);
            if (total >= opt) {
                sigma = candidate;
                opt = total;
                break;
            }
        }
        used[static_cast<std::size_t>(sigma[static_cast<std::size_t>(l)])] = 1;
        prefix += weights(sigma[static_cast<std::size_t>(l)], l);
    }

    AssignmentResult out;
    out.permutation = std::move(sigma);
    out.total_weight = column_order_sum(weights, out.permutation);
    return out;
}

AssignmentResult max_assignment_brute_force(const RealMatrix& weights) {
    validate_weights(weights);
    const Index n = weights.rows();
    if (n > 10) {
        throw ValidationError("max_assignment_brute_force: d > 10 would enumerate > 3.6M permutations");
    }
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    AssignmentResult best;
    best.total_weight = -std::numeric_limits<double>::infinity();
    // next_permutation walks sequences in lexicographic order, so keeping
    // only strict improvements leaves the lexicographically smallest
    // maximizer in place.
    do {
        double total = column_order_sum(weights, perm);
        if (total > best.total_weight) {
            best.total_weight = total;
            best.permutation = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace cgpkit
