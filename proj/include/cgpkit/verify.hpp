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

#ifndef CGPKIT_VERIFY_HPP
#define CGPKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgpkit/types.hpp"

namespace cgpkit {

struct VerifyOptions {
    std::vector<Index> dims = {2, 3, 4};
    std::uint64_t seed = 12345;
    int n_channels = 50;
    std::uint64_t n_samples = 20000;
};

struct CheckResult {
    std::string name;
    int instances = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Self-check battery over randomized inputs: algebraic identities,
// monotonicity and invariance properties, cross-route agreement, and
// Monte Carlo consistency. Fully deterministic for a given options
// struct (every check draws from its own dedicated RNG stream).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// The same battery as a JSON report (options echoed, one record per
// check, and an "all_pass" flag).
nlohmann::json verification_report(const VerifyOptions& options);

}  // namespace cgpkit

#endif
