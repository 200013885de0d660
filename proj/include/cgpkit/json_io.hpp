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

#ifndef CGPKIT_JSON_IO_HPP
#define CGPKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cgpkit/channels.hpp"
#include "cgpkit/ensembles.hpp"

namespace cgpkit {

// The file parses as JSON but does not match the expected document shape.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Complex scalars are [re, im]; matrices are arrays of rows.
nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);

// Real matrices are flat row-major arrays (dim is carried separately).
nlohmann::json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const nlohmann::json& j, Index dim);

// Channel document:
//   {"dim": d, "type": "unitary"|"kraus",
//    "matrix": <matrix> | "kraus_ops": [<matrix>, ...],
//    "basis": <matrix, optional>, "label": <string, optional>}
nlohmann::json channel_to_json(const Channel& ch);
Channel channel_from_json(const nlohmann::json& j, double tolerance = tol::kChannel);

// Ensemble document:
//   {"dim": d, "kind": <kind>, "entries": <flat row-major, optional>,
//    "alpha": <perm_invariant>, "params": <dirichlet>,
//    "n_samples"/"seed": <dirichlet provenance>}
// On read, explicit entries win; otherwise the matrix is rebuilt from the
// kind and its parameters.
nlohmann::json scm_to_json(const SimplexCorrelationMatrix& s);
SimplexCorrelationMatrix scm_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cgpkit

#endif
