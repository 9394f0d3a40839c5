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
#include <vector>

#include "ldoi/types.hpp"

namespace ldoi {

/// Smallest circular arc containing all unitary eigenvalues:
/// theta = 2 pi - (largest gap between consecutive eigenphases), zero when
/// all eigenvalues coincide.
struct ArcResult {
  double theta = 0.0;
  std::vector<double> eigen_angles;  // sorted, in [0, 2 pi)
};

/// Arc of a unitary triple; the spectrum is collected from B and the 2x2
/// pair blocks. Throws ValidationError when an eigenvalue leaves the unit
/// circle by more than kUnitaryTol.
ArcResult arc(const MatrixTriple& t);

/// Circular-gap rule on a raw eigenvalue list (dense oracle path).
double spectral_arc(const std::vector<Complex>& eigenvalues);

/// Copies needed for perfect discrimination: k = ceil(pi / theta(X2' X1)).
/// theta below 1e-9 is surfaced as equal_spectrum (the operators agree up
/// to phase and no number of copies separates them).
struct CopyCount {
  bool equal_spectrum = false;
  int k = 0;
};

CopyCount k_copies(const MatrixTriple& t1, const MatrixTriple& t2);

/// Upper bound on k_copies from the block structure: the minimum of the
/// per-block copy counts (B against B', and each 2x2 (A, C) block pair).
/// Blocks with equal spectra do not constrain the minimum; if all are
/// equal-spectrum the signal propagates.
CopyCount k_bound(const MatrixTriple& t1, const MatrixTriple& t2);

/// Sampled values of the local (product) numerical range,
///   <v (.) conj v| A |w (.) conj w> + <v (.) w| B~ |v (.) w>
///     + <v (.) conj w| C~ |v (.) conj w>,
/// over Haar product probes; B~, C~ are B, C without their diagonals. The
/// first ten samples are cross-checked against the dense form
/// <v x w|X|v x w> at 1e-10. Reports the smallest |value| and its witness.
struct LocalRangeSample {
  std::vector<Complex> values;
  double min_abs = 0.0;
  int argmin = -1;
  Vector best_v, best_w;
};

LocalRangeSample local_range_sample(const MatrixTriple& t, int n_samples,
                                    std::uint64_t seed);

}  // namespace ldoi
