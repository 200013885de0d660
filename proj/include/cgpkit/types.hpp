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

#ifndef CGPKIT_TYPES_HPP
#define CGPKIT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cgpkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default absolute tolerances. Callers may override per call where a
// tolerance parameter is exposed; these are the library-wide defaults.
namespace tol {
// Quantities that are exact up to floating-point round-off (unitarity,
// hermiticity, basis orthonormality, closed-form identities).
inline constexpr double kExact = 1e-10;
// Trace preservation / unitality of user-provided Kraus sets.
inline constexpr double kChannel = 1e-8;
// Agreement between two algebraically equal computation routes.
inline constexpr double kCross = 1e-9;
}  // namespace tol

// Input fails a structural requirement (shape, symmetry, normalization).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// Kraus set is trace preserving but not unital. Kept distinct from
// ValidationError so callers can map it to a dedicated failure mode.
struct NotUnitalError : ValidationError {
    using ValidationError::ValidationError;
};

// A measure defined only for unitary channels was requested for a channel
// with more than one Kraus operator.
struct UnitaryOnlyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cgpkit

#endif
