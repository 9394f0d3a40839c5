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

#include <utility>
#include <vector>

#include "ldoi/types.hpp"

namespace ldoi {

/// Dense d^2 x d^2 operator of a triple in the computational product basis,
/// row pair (i,j) flattened row-major as i*d + j:
///   X[ij, ij] = A_ij,  X[ii, jj] = B_ij (i != j),  X[ij, ji] = C_ij (i != j),
/// all other coordinates zero.
Matrix embed(const MatrixTriple& t);

/// Inverse of embed. Throws StructuralError when the side is not a perfect
/// square and ValidationError ("not LDOI", with the offending coordinate)
/// when any entry outside the pattern exceeds kEqTol. Pattern membership is
/// separate from triple validity: the result may still fail validate().
MatrixTriple extract(const Matrix& x);

/// Block decomposition in the basis {|ii>} followed by {|ij>, |ji>} for
/// i < j in lexicographic order: the operator is B plus one 2x2 block
/// [[A_ij, C_ij], [C_ji, A_ji]] per pair.
struct BlockDecomposition {
  Matrix b_block;
  std::vector<Eigen::Matrix2cd> pair_blocks;
  std::vector<std::pair<int, int>> pair_index;
};

BlockDecomposition blocks(const MatrixTriple& t);

/// Reassembles a block decomposition into the dense operator (permuted
/// direct sum conjugated back to the product basis).
Matrix assemble(const BlockDecomposition& bd);

/// Coordinate shuffles on dense operators, independent of the triple layer:
///   realign            Y[ij, kl] = X[ik, jl]
///   partial transpose  Y[ij, kl] = X[il, kj]
Matrix dense_realign(const Matrix& x);
Matrix dense_partial_transpose(const Matrix& x);

}  // namespace ldoi
