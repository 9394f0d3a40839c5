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

#include "ldoi/embed.hpp"

#include <cmath>
#include <string>

#include "ldoi/triple.hpp"

namespace ldoi {

Matrix embed(const MatrixTriple& t) {
  const int d = t.dim;
  Matrix x = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      x(i * d + j, i * d + j) = t.A(i, j);
      if (i != j) {
        x(i * d + i, j * d + j) = t.B(i, j);
        x(i * d + j, j * d + i) = t.C(i, j);
      }
    }
  return x;
}

MatrixTriple extract(const Matrix& x) {
  if (x.rows() != x.cols()) throw StructuralError("operator must be square");
  const int side = int(x.rows());
  const int d = int(std::lround(std::sqrt(double(side))));
  if (d * d != side)
    throw StructuralError("operator side " + std::to_string(side) +
                          " is not a perfect square");
  MatrixTriple t;
  t.dim = d;
  t.A = Matrix::Zero(d, d);
  t.B = Matrix::Zero(d, d);
  t.C = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      t.A(i, j) = x(i * d + j, i * d + j);
      if (i != j) {
        t.B(i, j) = x(i * d + i, j * d + j);
        t.C(i, j) = x(i * d + j, j * d + i);
      } else {
        t.B(i, i) = x(i * d + i, i * d + i);
        t.C(i, i) = x(i * d + i, i * d + i);
      }
    }
  // every coordinate outside the pattern must vanish
  const Matrix back = embed(t);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (std::abs(back(r, c) - x(r, c)) > kEqTol)
        throw ValidationError(
            "not LDOI: coordinate (" + std::to_string(r / d) +
            std::to_string(r % d) + "," + std::to_string(c / d) +
            std::to_string(c % d) + ") = " + std::to_string(x(r, c).real()) +
            (x(r, c).imag() < 0 ? "-" : "+") +
            std::to_string(std::abs(x(r, c).imag())) + "i lies off the pattern");
    }
  return t;
}

BlockDecomposition blocks(const MatrixTriple& t) {
  const int d = t.dim;
  BlockDecomposition bd;
  bd.b_block = t.B;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Eigen::Matrix2cd blk;
      blk << t.A(i, j), t.C(i, j), t.C(j, i), t.A(j, i);
      bd.pair_blocks.push_back(blk);
      bd.pair_index.emplace_back(i, j);
    }
  return bd;
}

Matrix assemble(const BlockDecomposition& bd) {
  const int d = int(bd.b_block.rows());
  Matrix x = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) x(i * d + i, j * d + j) = bd.b_block(i, j);
  for (std::size_t k = 0; k < bd.pair_blocks.size(); ++k) {
    const auto [i, j] = bd.pair_index[k];
    const auto& blk = bd.pair_blocks[k];
    x(i * d + j, i * d + j) = blk(0, 0);
    x(i * d + j, j * d + i) = blk(0, 1);
    x(j * d + i, i * d + j) = blk(1, 0);
    x(j * d + i, j * d + i) = blk(1, 1);
  }
  return x;
}

namespace {

int exact_side(const Matrix& x) {
  if (x.rows() != x.cols()) throw StructuralError("operator must be square");
  const int side = int(x.rows());
  const int d = int(std::lround(std::sqrt(double(side))));
  if (d * d != side)
    throw StructuralError("operator side is not a perfect square");
  return d;
}

}  // namespace

Matrix dense_realign(const Matrix& x) {
  const int d = exact_side(x);
  Matrix y(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          y(i * d + j, k * d + l) = x(i * d + k, j * d + l);
  return y;
}

Matrix dense_partial_transpose(const Matrix& x) {
  const int d = exact_side(x);
  Matrix y(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          y(i * d + j, k * d + l) = x(i * d + l, k * d + j);
  return y;
}

}  // namespace ldoi
