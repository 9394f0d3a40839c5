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

#include "ldoi/types.hpp"

namespace ldoi {

/// Continuous non-locality measures of a unitary triple X:
///   e_op        = E(X)  in [0, 1 - 1/d^2]
///   e_op_swapped= E(XS) for the swap gate S
///   e_power     = (E(X) + E(XS) - E(S)) / E(S)
///   typicality  = (E(X) - E(XS) + E(S)) / (2 E(S))
/// with E(S) = 1 - 1/d^2.
struct EntanglementProfile {
  double e_op = 0.0;
  double e_op_swapped = 0.0;
  double e_power = 0.0;
  double typicality = 0.0;
};

inline double swap_entanglement(int d) { return 1.0 - 1.0 / (double(d) * d); }

/// Closed forms in the triple coordinates (valid for unitary input, which
/// is checked):
///   E(X)  = 1 - d^-4 [ Tr{(AA')^2}
///                      + sum_{i!=j} (|B_ij|^2 + |C_ij|^2)^2
///                      + sum_{i!=j} |B_ij conj(C_ji) + conj(B_ji) C_ij|^2 ]
///   E(XS) = same with the roles of A and C exchanged.
EntanglementProfile profile_closed_form(const MatrixTriple& t);

/// Dense route: E(X) and E(XS) from the Gram traces of the realigned and
/// partially transposed embeddings. Must agree with the closed form.
EntanglementProfile profile_oracle(const MatrixTriple& t);

/// Entangling power of the dual LDUI triple built from a matrix C with
/// unimodular entries: e_p = E(XS)/E(S) with E(XS) = 1 - Tr[(CC')^2]/d^4.
/// is_max reports whether CC' = d*1 within kUnitaryTol * d (the complex
/// Hadamard condition), in which case e_p = d/(d+1).
struct MaxEpResult {
  double e_power = 0.0;
  bool is_max = false;
  double gram_defect = 0.0;  // ||CC' - d*1||_F
};

MaxEpResult max_ep_dual_ldui(const Matrix& c);

/// Fourier matrix F_jk = exp(2 pi i j k / d), the canonical complex
/// Hadamard witness in every dimension.
Matrix fourier_matrix(int d);

}  // namespace ldoi
