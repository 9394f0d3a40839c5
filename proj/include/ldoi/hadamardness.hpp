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
#include <string>
#include <vector>

#include "ldoi/hadamardness_kernel.hpp"
#include "ldoi/types.hpp"

namespace ldoi {

/// d x d matrix over {+1, -1}, one bitmask per row (bit j set = entry -1
/// at column j).
struct SignMatrix {
  int dim = 0;
  std::vector<std::uint32_t> rows;

  int entry(int i, int j) const {
    return (rows[std::size_t(i)] >> unsigned(j)) & 1u ? -1 : +1;
  }
  bool dephased() const;  // first row and first column all +1

  /// Dephased matrix for a candidate index (see hadamardness_kernel.hpp).
  static SignMatrix from_index(int d, std::uint64_t n);
  std::uint64_t to_index() const;

  Matrix dense() const;
  std::string to_text() const;  // one "+-" row per line
};

/// h(C) = Tr[(CC')^2] = sum_{i,j} |<row_i, row_j>|^2. Exact integers for
/// sign matrices: <row_i, row_j> = d - 2 popcount(rows_i XOR rows_j).
std::int64_t h_measure(const SignMatrix& c);
double h_measure(const Matrix& c);

struct SearchResult {
  int dim = 0;
  std::int64_t min_value = 0;
  std::uint64_t argmin_count = 0;
  SignMatrix first_argmin;  // lexicographically first
  double elapsed_seconds = 0.0;
  std::string kernel;
};

/// Exhaustive minimum of h over all 2^((d-1)^2) dephased sign matrices,
/// 2 <= d <= 6 (the d = 7 space already has 2^36 candidates; refused).
/// Work is split across `workers` threads by index range (0 = one per
/// hardware thread); the merge is associative, so the result does not
/// depend on the worker count. A kernel may be forced for testing.
SearchResult exhaustive_min(int d, int workers = 0,
                            kernels::ScanFn kernel = nullptr);

/// True when min h at odd d equals d^3 + d(d-1). Supported for d in {3, 5}.
bool odd_d_check(int d);

/// Real Hadamard matrix of power-of-two size (Sylvester doubling).
Matrix sylvester_hadamard(int d);

}  // namespace ldoi
