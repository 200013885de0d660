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

#ifndef CGPKIT_ASSIGNMENT_HPP
#define CGPKIT_ASSIGNMENT_HPP

#include <vector>

#include "cgpkit/types.hpp"

namespace cgpkit {

struct AssignmentResult {
    // permutation[l] is the row matched to column l.
    std::vector<Index> permutation;
    // sum_l weights(permutation[l], l), accumulated in column order so the
    // value is bit-reproducible.
    double total_weight = 0.0;
};

// Exact maximum-weight perfect matching on a square weight matrix, solved
// by the Hungarian algorithm (shortest augmenting paths with dual
// potentials, O(d^3)) on the complemented costs max(W) - W. Among all
// maximizing permutations, returns the lexicographically smallest sequence
// (permutation[0], permutation[1], ...). Entries must be finite.
AssignmentResult max_assignment(const RealMatrix& weights);

// Exhaustive reference solver with the same tie rule. Guarded to d <= 10.
AssignmentResult max_assignment_brute_force(const RealMatrix& weights);

}  // namespace cgpkit

#endif
