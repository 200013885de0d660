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

#include "cgpkit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgpkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(mix64(seed) + stream)) {}

std::uint64_t StreamRng::next_u64() { return engine_(); }

double StreamRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t StreamRng::uniform_index(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: n must be positive");
    }
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double StreamRng::gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    cached_gaussian_ = r * std::sin(kTwoPi * u2);
    has_cached_gaussian_ = true;
    return r * std::cos(kTwoPi * u2);
}

// Returns log of a Gamma(shape, 1) variate. Marsaglia-Tsang squeeze for
// shape >= 1; the shape < 1 case boosts through Gamma(shape + 1) with the
// standard power correction, applied in log space so shapes as small as
// 1e-12 do not underflow to zero.
double StreamRng::log_gamma_sample(double shape) {
    if (!(shape > 0.0)) {
        throw std::invalid_argument("log_gamma_sample: shape must be positive");
    }
    if (shape < 1.0) {
        double u = 1.0 - uniform();  // (0, 1]
        return log_gamma_sample(shape + 1.0) + std::log(u) / shape;
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = gaussian();
        double t = 1.0 + c * x;
        if (t <= 0.0) {
            continue;
        }
        double v = t * t * t;
        double u = 1.0 - uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return std::log(d) + 3.0 * std::log(t);
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return std::log(d) + 3.0 * std::log(t);
        }
    }
}

std::vector<double> StreamRng::dirichlet(const std::vector<double>& params) {
    if (params.empty()) {
        throw std::invalid_argument("dirichlet: needs at least one parameter");
    }
    std::vector<double> logs(params.size());
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < params.size(); ++i) {
        logs[i] = log_gamma_sample(params[i]);
        max_log = std::max(max_log, logs[i]);
    }
    std::vector<double> out(params.size());
    double total = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        out[i] = std::exp(logs[i] - max_log);
        total += out[i];
    }
    for (double& x : out) {
        x /= total;
    }
    return out;
}

std::vector<Index> StreamRng::permutation(Index n) {
    std::vector<Index> p(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = i;
    }
    for (Index i = n - 1; i > 0; --i) {
        auto j = static_cast<Index>(uniform_index(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

}  // namespace cgpkit
