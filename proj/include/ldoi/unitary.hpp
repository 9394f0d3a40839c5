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

#include <cstdint>
#include <utility>
#include <vector>

#include "ldoi/types.hpp"

namespace ldoi {

struct PairPhase {
  int i = 0, j = 0;
  bool present = false;  // false when A_ij and C_ij both vanish
  Complex omega{1.0, 0.0};
};

/// Outcome of the unitarity test. A triple is unitary iff B is unitary and
/// every 2x2 block [[A_ij, C_ij], [C_ji, A_ji]] is unitary; equivalently,
/// per pair there is a phase omega with A_ji = omega * conj(A_ij),
/// C_ji = -omega * conj(C_ij) and |A_ij|^2 + |C_ij|^2 = 1. Both routes are
/// evaluated and must agree.
struct UnitarityReport {
  bool is_unitary = false;
  double b_defect = 0.0;               // ||B'B - 1||_F
  std::pair<int, int> worst_pair{-1, -1};
  double pair_defect = 0.0;            // worst 2x2 block defect
  double norm_defect = 0.0;            // worst | |A_ij|^2 + |C_ij|^2 - 1 |
  double phase_defect = 0.0;           // worst phase-relation residual
  std::vector<PairPhase> phase_witnesses;
};

/// field = Real additionally requires all entries real within kEqTol
/// (throws ValidationError otherwise); the recovered phases are then signs.
UnitarityReport check_unitary(const MatrixTriple& t,
                              Field field = Field::Complex);

/// Haar-style sample of a unitary (orthogonal) member of the class through
/// the block parametrization: B from U(d) / O(d) (diagonal phases or signs
/// for LDUI), one Haar 2x2 block per pair i < j, except CLDUI where the
/// off-diagonal entries of A are independent phases and C = diag(B).
MatrixTriple random_unitary(int d, InvarianceClass cls, Field field,
                            std::uint64_t seed);

/// Real dimension of the unitary subgroup cut out by the class:
///   LDOI  d^2 + 4 d(d-1)/2,  LDUI  d + 4 d(d-1)/2,  CLDUI  d^2 + d(d-1).
long long subgroup_dim(int d, InvarianceClass cls);

/// Empirical check of subgroup_dim: rank of the finite-difference Jacobian
/// of the unitarity constraint map at a random point of the subgroup,
/// subtracted from the ambient parameter count.
long long tangent_dim_probe(int d, InvarianceClass cls, std::uint64_t seed);

}  // namespace ldoi
