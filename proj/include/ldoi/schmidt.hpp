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

/// Nonzero operator Schmidt coefficients in descending order; for a unitary
/// source the squares sum to d^2.
struct SchmidtSpectrum {
  std::vector<double> coefficients;
  int rank = 0;
};

/// Operator Schmidt rank through the realigned block structure:
///   rank A + sum over i < j of rank [[B_ij, C_ij], [C_ji, B_ji]],
/// with all singular values thresholded against the global maximum at the
/// d^2 problem scale so the result matches the dense realignment rank.
int schmidt_rank(const MatrixTriple& t);

/// Singular values of the dense realignment above the rank threshold.
SchmidtSpectrum schmidt_coefficients(const MatrixTriple& t);

/// Real orthogonal triple with the requested Schmidt rank, d >= 3 and
/// target in 1..d^2. Low targets use sign matrices with duplicated columns
/// of J - 2*1; high targets use an orthogonal B with a prescribed number of
/// zero diagonal entries and dense off-diagonal part; the middle band keeps
/// B diagonal and splits the target between rank(A) and the number of
/// nonzero off-diagonal entries of C. Every output is re-verified against
/// the dense oracle before being returned.
MatrixTriple make_rank(int d, int target, std::uint64_t seed = 0);

/// Hand-constructed orthogonal triples realizing specific ranks at
/// d = 3, 4, 5 (returned as (rank, triple) pairs). make_rank serves these
/// verbatim for the matching targets.
std::vector<std::pair<int, MatrixTriple>> rank_catalog(int d);

/// Orthogonal matrix with exact zeros at the first `zeros` diagonal entries
/// and every other entry bounded away from zero. Seeded Newton iteration on
/// the orthogonal group with rejection on the magnitude pattern.
Matrix orthogonal_with_zero_diagonal(int d, int zeros, std::uint64_t seed);

}  // namespace ldoi
