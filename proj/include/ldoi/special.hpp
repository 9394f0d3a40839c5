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
#include <utility>

#include "ldoi/rng.hpp"
#include "ldoi/types.hpp"

namespace ldoi {

/// Dual / PT / perfect membership. The definitional route (unitarity of the
/// triple and of its realignment / partial transpose) and the direct
/// condition lists are both evaluated; routes_agree records their match.
///
/// Direct dual conditions: A, B unitary; for i < j, |A_ij| = |B_ij|,
/// |A_ij|^2 + |C_ij|^2 = 1, and a common phase omega with
/// A_ji = omega conj(A_ij), B_ji = omega conj(B_ij), C_ji = -omega conj(C_ij).
/// PT conditions mirror these with the roles of B and C exchanged.
struct DualityReport {
  bool is_dual = false;
  bool is_pt = false;
  bool is_perfect = false;
  bool dual_conditions = false;  // direct condition list
  bool pt_conditions = false;
  bool routes_agree = false;
  double a_defect = 0.0;  // matrix unitarity defects
  double b_defect = 0.0;
  double c_defect = 0.0;
  double dual_modulus_defect = 0.0;  // worst |A_ij|^2 - |B_ij|^2 and
                                     // |A_ij|^2 + |C_ij|^2 - 1
  double dual_phase_defect = 0.0;
  double pt_modulus_defect = 0.0;
  double pt_phase_defect = 0.0;
};

DualityReport check_special(const MatrixTriple& t);

/// A = B = 2P - 1 for an orthogonal projection P; C carries the remaining
/// modulus 1 - |A_ij|^2 with phases defaulting to real nonnegative
/// (override per pair i < j via `phases`, unit modulus each) and
/// C_ji = -conj(C_ij). Throws when P fails P^2 = P = P' beyond kUnitaryTol.
MatrixTriple make_dual_projection(const Matrix& p,
                                  const Matrix* phases = nullptr);

/// Same with A = B = omega^(1/2) (2P - 1) and the pair phase equal to omega
/// (principal square root).
MatrixTriple make_dual_phase_projection(const Matrix& p, Complex omega,
                                        const Matrix* phases = nullptr);

/// A = B = diag(C) for a matrix C with unimodular entries; this is exactly
/// the dual unitary LDUI family.
MatrixTriple make_dual_ldui(const Matrix& c);

/// Rank-r Haar-random orthogonal projection (first r columns of a Haar
/// unitary).
Matrix haar_projection(int d, int rank, Rng& rng);

/// Certificate that a triple cannot be perfect (simultaneously dual and PT
/// unitary). Being perfect forces |A_ij| = |B_ij| = |C_ij| = 1/sqrt(2) for
/// every pair, and then the B relations force the dual phase omega and the
/// PT phase lambda to coincide while the A and C relations force
/// omega = -lambda; no triple survives. The first violated requirement in
/// pair order is returned.
struct PerfectWitness {
  enum class Clause { Vacuous, Modulus, PhaseContradiction, Satisfied };
  Clause clause = Clause::Satisfied;
  std::pair<int, int> pair{-1, -1};
  char matrix = '?';        // for Modulus: which of A/B/C deviates
  double value = 0.0;       // offending modulus
  double dual_phase_defect = 0.0;  // residuals of A_ji = +/- omega conj(A_ij)
  double pt_phase_defect = 0.0;    // and the C analogues, omega from B
  std::string detail;
};

PerfectWitness perfect_witness(const MatrixTriple& t);

}  // namespace ldoi
