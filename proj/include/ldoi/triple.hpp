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

#include <string>
#include <vector>

#include "ldoi/rng.hpp"
#include "ldoi/types.hpp"

namespace ldoi {

struct ConstraintViolation {
  std::string constraint;
  int i = -1, j = -1;
  double defect = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ConstraintViolation> violations;
};

/// Checks the shared-diagonal invariant and the class-specific diagonality
/// constraint (B diagonal for LDUI, C diagonal for CLDUI), each within
/// kEqTol. Shape mismatches are structural and throw instead of reporting.
ValidationReport validate(const MatrixTriple& t,
                          InvarianceClass cls = InvarianceClass::LDOI);

/// Throws ValidationError when validate() reports a violation.
void require_valid(const MatrixTriple& t,
                   InvarianceClass cls = InvarianceClass::LDOI);

/// Triple of the identity operator 1 (x) 1: (J, 1, 1).
MatrixTriple identity_triple(int d);

/// Triple of the swap gate: (1, 1, J).
MatrixTriple swap_triple(int d);

/// Triple whose embedding is the ordinary matrix product of the two
/// embeddings:
///   A = A1.A2 + C1.C2^T + diag(B1 B2 - A1.A2 - C1.C2^T)
///   B = B1 B2
///   C = A1.C2 + C1.A2^T + diag(B1 B2 - A1.C2 - C1.A2^T)
/// where "." is the entrywise product.
MatrixTriple triple_product(const MatrixTriple& t1, const MatrixTriple& t2);

/// Bilinear composition matching the composition of the associated
/// diagonal-covariant maps:
///   A = A1 A2
///   B = B1.B2 + C1.C2^T + diag(A1 A2 - 2 A1.A2)
///   C = B1.C2 + C1.B2^T + diag(A1 A2 - 2 A1.A2)
MatrixTriple triple_compose(const MatrixTriple& t1, const MatrixTriple& t2);

enum class SymmetryOp { Transpose, Adjoint, Realign, PartialTranspose };

/// The four involutions at triple level:
///   transpose         -> (A, B^T, C^T)
///   adjoint           -> (conj A, B', C')
///   realign           -> (B, A, C)
///   partial transpose -> (A, C, B)
MatrixTriple symmetry(const MatrixTriple& t, SymmetryOp op);

MatrixTriple add(const MatrixTriple& t1, const MatrixTriple& t2);
MatrixTriple scale(Complex alpha, const MatrixTriple& t);

/// Generic (typically non-unitary) member of the requested subspace:
/// Gaussian entries with the diagonals of B and C copied from A, and the
/// class-specific off-diagonal part zeroed.
MatrixTriple random_triple(int d, InvarianceClass cls, Field field, Rng& rng);

}  // namespace ldoi
