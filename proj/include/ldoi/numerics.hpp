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

#include <vector>

#include "ldoi/types.hpp"

namespace ldoi {

/// Frobenius norm of M'M - 1 (M' = conjugate transpose).
double unitarity_defect(const Matrix& m);

/// True when every imaginary part is below kEqTol.
bool is_real(const Matrix& m);

/// Numerical rank: singular values sigma are counted when
/// sigma > max(scale_dim, rows, cols) * sigma_max * 1e-12. Pass the ambient
/// problem size as scale_dim when ranking sub-blocks of a larger operator so
/// the threshold matches the dense computation.
int numerical_rank(const Matrix& m, int scale_dim = 0);

/// Counts entries of a singular-value list above the rank threshold
/// associated with scale_dim and the list's own maximum.
int count_above_rank_threshold(const std::vector<double>& singular_values,
                               int scale_dim);

/// Exact rank of a small integer matrix (fraction-free Bareiss elimination).
int integer_rank(const Eigen::MatrixXi& m);

/// Sorts a copy of the eigenvalue list by (real, imag) and reports the
/// largest pairwise distance to the equally sorted reference list; used for
/// multiset spectrum comparisons.
double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace ldoi
