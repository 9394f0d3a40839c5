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
#include <random>

#include "ldoi/types.hpp"

namespace ldoi {

/// Deterministic random source. Uniforms come from mt19937_64 and normals
/// from a hand-rolled Box-Muller, so identical seeds give identical streams
/// on every platform (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform();            // [0, 1)
  double gaussian();           // N(0, 1)
  Complex gaussian_complex();  // (N + iN)/sqrt(2), unit variance
  Complex phase();             // uniform on the unit circle
  int sign();                  // +1 or -1

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Mixes a base seed with a stream index (splitmix64 finalizer) so that
/// per-sample or per-worker substreams are independent and reproducible.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed into Q.
Matrix haar_unitary(int n, Rng& rng);

/// Haar-distributed real orthogonal matrix (stored with zero imaginary part).
Matrix haar_orthogonal(int n, Rng& rng);

/// Haar-random unit vector in C^n (normalized complex Gaussian).
Vector haar_state(int n, Rng& rng);

}  // namespace ldoi
