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

#include "ldoi/entangle.hpp"

#include <cmath>
#include <numbers>

#include "ldoi/embed.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace ldoi {

namespace {

void require_unitary_input(const MatrixTriple& t) {
  if (t.dim < 2)
    throw StructuralError("entanglement measures need d >= 2");
  if (!check_unitary(t).is_unitary)
    throw ValidationError("entanglement closed forms hold for unitary "
                          "triples only; input is not unitary");
}

EntanglementProfile finish(int d, double e_op, double e_swapped) {
  const double es = swap_entanglement(d);
  EntanglementProfile p;
  p.e_op = e_op;
  p.e_op_swapped = e_swapped;
  p.e_power = (e_op + e_swapped - es) / es;
  p.typicality = (e_op - e_swapped + es) / (2.0 * es);
  return p;
}

// shared kernel of the two closed forms: the A-slot matrix contributes its
// Gram trace, the other two only off-diagonal combinations
double tsallis_sum(const Matrix& slot_a, const Matrix& b, const Matrix& other) {
  const int d = int(slot_a.rows());
  const Matrix gram = slot_a * slot_a.adjoint();
  double total = (gram * gram).trace().real();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const double bo = std::norm(b(i, j)) + std::norm(other(i, j));
      total += bo * bo;
      total += std::norm(b(i, j) * std::conj(other(j, i)) +
                         std::conj(b(j, i)) * other(i, j));
    }
  const double d4 = double(d) * d * d * d;
  return 1.0 - total / d4;
}

}  // namespace

EntanglementProfile profile_closed_form(const MatrixTriple& t) {
  require_valid(t);
  require_unitary_input(t);
  const double e_op = tsallis_sum(t.A, t.B, t.C);
  const double e_swapped = tsallis_sum(t.C, t.B, t.A);
  return finish(t.dim, e_op, e_swapped);
}

EntanglementProfile profile_oracle(const MatrixTriple& t) {
  require_valid(t);
  require_unitary_input(t);
  const int d = t.dim;
  const double d4 = double(d) * d * d * d;
  const Matrix x = embed(t);
  auto tsallis = [d4](const Matrix& m) {
    const Matrix gram = m * m.adjoint();
    return 1.0 - gram.squaredNorm() / d4;  // Tr[(MM')^2] = ||MM'||_F^2
  };
  return finish(d, tsallis(dense_realign(x)),
                tsallis(dense_partial_transpose(x)));
}

MaxEpResult max_ep_dual_ldui(const Matrix& c) {
  if (c.rows() != c.cols()) throw StructuralError("C must be square");
  const int d = int(c.rows());
  if (d < 2) throw StructuralError("need d >= 2");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (std::abs(std::abs(c(i, j)) - 1.0) > kUnitaryTol)
        throw ValidationError("dual LDUI form needs all |C_ij| = 1");
  const double d4 = double(d) * d * d * d;
  const Matrix gram = c * c.adjoint();
  const double e_swapped = 1.0 - gram.squaredNorm() / d4;
  MaxEpResult r;
  r.e_power = e_swapped / swap_entanglement(d);
  r.gram_defect =
      (gram - double(d) * Matrix::Identity(d, d)).norm();
  r.is_max = r.gram_defect <= kUnitaryTol * d;
  return r;
}

Matrix fourier_matrix(int d) {
  if (d < 1) throw StructuralError("dimension must be >= 1");
  Matrix f(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double a = 2.0 * std::numbers::pi * double(j) * double(k) / d;
      f(j, k) = Complex(std::cos(a), std::sin(a));
    }
  return f;
}

}  // namespace ldoi
