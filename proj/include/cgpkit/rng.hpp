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

#ifndef CGPKIT_RNG_HPP
#define CGPKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cgpkit/types.hpp"

namespace cgpkit {

// Deterministic, stream-splittable random source.
//
// Stream k of seed s is a mt19937_64 engine seeded with
// splitmix64(splitmix64(s) + k). Distinct (seed, stream) pairs give
// statistically independent sequences, so independent pieces of work
// (per-check batteries, Monte Carlo workers) can draw from their own
// stream without sharing engine state, and every sequence is reproducible
// across platforms and runs.
//
// All samplers are hand-rolled on top of the raw 64-bit output; none of
// the std::<distribution> adapters are used, since their outputs are not
// specified bit-for-bit by the standard.
class StreamRng {
  public:
    explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform();

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard normal via Box-Muller (pairs cached).
    double gaussian();

    // Sample from Dirichlet(params). Computed through log-gamma variates
    // and a softmax, so very small concentration parameters safely produce
    // near-vertex samples instead of 0/0.
    std::vector<double> dirichlet(const std::vector<double>& params);

    // Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
    std::vector<Index> permutation(Index n);

  private:
    double log_gamma_sample(double shape);

    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace cgpkit

#endif
