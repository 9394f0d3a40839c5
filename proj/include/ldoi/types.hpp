// Copyright 2026 The ldoi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ldoi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Entrywise absolute tolerance for shared-diagonal, realness and
/// pattern-membership checks.
inline constexpr double kEqTol = 1e-10;

/// Frobenius tolerance for unitarity / orthogonality defects.
inline constexpr double kUnitaryTol = 1e-9;

/// Which invariant subspace a triple claims membership of.
///   LDUI  : B diagonal        (invariance under U ⊗ U, U diagonal unitary)
///   CLDUI : C diagonal        (invariance under U ⊗ conj(U))
///   LDOI  : no extra constraint (invariance under O ⊗ O, O diagonal signs)
enum class InvarianceClass { LDUI, CLDUI, LDOI };

enum class Field { Complex, Real };

const char* to_string(InvarianceClass cls);
const char* to_string(Field field);
InvarianceClass invariance_class_from_string(const std::string& s);
Field field_from_string(const std::string& s);

/// Malformed shapes or out-of-range arguments.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input data fails a membership or precondition check.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two redundant computation routes disagreed beyond tolerance.
struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Three d x d complex matrices with a shared diagonal. A holds the
/// |ij><ij| coefficients of the corresponding bipartite operator, B the
/// |ii><jj| ones and C the |ij><ji| ones; the three diagonals address the
/// same |ii><ii| coordinates and therefore must agree.
struct MatrixTriple {
  int dim = 0;
  Matrix A, B, C;
};

}  // namespace ldoi
