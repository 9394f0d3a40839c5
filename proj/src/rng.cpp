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

#include "ldoi/rng.hpp"

#include <cmath>
#include <numbers>

namespace ldoi {

double Rng::uniform() {
  // 53 random bits into [0, 1)
  return double(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::gaussian_complex() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

Complex Rng::phase() {
  const double a = 2.0 * std::numbers::pi * uniform();
  return Complex(std::cos(a), std::sin(a));
}

int Rng::sign() { return (engine_() >> 33) & 1u ? -1 : +1; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

Matrix haar_from_gaussian(Matrix g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    // absorb the R phases so Q is Haar rather than QR-convention dependent
    q.col(k) *= (mag > 0.0) ? rkk / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

Matrix haar_unitary(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
  return haar_from_gaussian(std::move(g));
}

Matrix haar_orthogonal(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(rng.gaussian(), 0.0);
  return haar_from_gaussian(std::move(g));
}

Vector haar_state(int n, Rng& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.gaussian_complex();
  return v / v.norm();
}

}  // namespace ldoi
