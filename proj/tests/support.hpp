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

// Shared fixtures: independently coded oracles and samplers used by the
// unit and acceptance suites. Everything here is deliberately written with
// plain index loops so it shares no code path with the library.

#pragma once

#include <cstdint>
#include <vector>

#include "ldoi/rng.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/types.hpp"

namespace ldoi::testing {

// Second, independent evaluator of the triple composition, transcribing the
// defining formulas entry by entry.
inline MatrixTriple compose_reference(const MatrixTriple& t1,
                                      const MatrixTriple& t2) {
  const int d = t1.dim;
  MatrixTriple out;
  out.dim = d;
  out.A = Matrix::Zero(d, d);
  out.B = Matrix::Zero(d, d);
  out.C = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex aa(0.0, 0.0);
      for (int k = 0; k < d; ++k) aa += t1.A(i, k) * t2.A(k, j);
      out.A(i, j) = aa;
      out.B(i, j) = t1.B(i, j) * t2.B(i, j) + t1.C(i, j) * t2.C(j, i);
      out.C(i, j) = t1.B(i, j) * t2.C(i, j) + t1.C(i, j) * t2.B(j, i);
    }
  for (int i = 0; i < d; ++i) {
    const Complex corr = out.A(i, i) - 2.0 * t1.A(i, i) * t2.A(i, i);
    out.B(i, i) += corr;
    out.C(i, i) += corr;
  }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Plain-loop realignment and partial transpose, used to pin the coordinate
// rules independently of the library implementation.
inline Matrix realign_reference(const Matrix& x, int d) {
  Matrix y(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          y(i * d + j, k * d + l) = x(i * d + k, j * d + l);
  return y;
}

inline Matrix pt_reference(const Matrix& x, int d) {
  Matrix y(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          y(i * d + j, k * d + l) = x(i * d + l, k * d + j);
  return y;
}

// Monte-Carlo entangling power: average linear entropy of X applied to Haar
// product states, rescaled by (d+1)/(d-1). Validation fixture only; the
// closed forms are the product.
inline double mc_entangling_power(const Matrix& x, int d, int samples,
                                  std::uint64_t seed) {
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, std::uint64_t(s)));
    const Vector phi = haar_state(d, rng);
    const Vector psi = haar_state(d, rng);
    Vector in(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) in(i * d + j) = phi(i) * psi(j);
    const Vector out = x * in;
    // reduced state on the first factor
    Matrix rho = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < d; ++j)
          acc += out(i * d + j) * std::conj(out(k * d + j));
        rho(i, k) = acc;
      }
    total += 1.0 - rho.squaredNorm();
  }
  return (double(d) + 1.0) / (double(d) - 1.0) * (total / samples);
}

}  // namespace ldoi::testing
