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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ldoi/discriminate.hpp"
#include "ldoi/embed.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"
#include "support.hpp"

using namespace ldoi;

namespace {

std::vector<Complex> dense_spectrum(const Matrix& x) {
  Eigen::ComplexEigenSolver<Matrix> es(x, false);
  return {es.eigenvalues().data(),
          es.eigenvalues().data() + es.eigenvalues().size()};
}

MatrixTriple diagonal_phase_triple(int d, const std::vector<double>& phases) {
  MatrixTriple t;
  t.dim = d;
  t.A = Matrix::Zero(d, d);
  t.B = Matrix::Zero(d, d);
  t.C = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const Complex z = std::polar(1.0, phases[std::size_t(i)]);
    t.A(i, i) = t.B(i, i) = t.C(i, i) = z;
  }
  // off-diagonal blocks: identity pairs keep the operator diagonal
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) t.A(i, j) = 1.0;
  return t;
}

}  // namespace

TEST_CASE("arc of identity is zero, arc of d=2 swap is pi") {
  CHECK(arc(identity_triple(3)).theta == doctest::Approx(0.0));
  CHECK(arc(swap_triple(2)).theta == doctest::Approx(std::numbers::pi));
}

TEST_CASE("arc rejects non-unitary triples") {
  Rng rng(3);
  const MatrixTriple t =
      random_triple(3, InvarianceClass::LDOI, Field::Complex, rng);
  CHECK_THROWS_AS(arc(t), ValidationError);
}

TEST_CASE("block arc equals the dense-spectrum arc") {
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;
    const MatrixTriple t =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 40u + trial);
    const double via_blocks = arc(t).theta;
    const double via_dense = spectral_arc(dense_spectrum(embed(t)));
    CHECK(std::abs(via_blocks - via_dense) <= 1e-9);
  }
}

TEST_CASE("tensor powers scale the arc as min(k theta, 2 pi)") {
  // The scaling law is exact while k*theta stays clear of wrapping: the
  // k-fold phase sumset spans [0, k theta] and its internal gaps are at
  // most theta, so for theta <= pi/2 and k <= 3 the containing arc is
  // exactly k theta. (A finite spectrum never attains the 2 pi branch:
  // its largest gap is positive.)
  int accepted = 0;
  for (std::uint64_t seed = 600; accepted < 10; ++seed) {
    const MatrixTriple t =
        random_unitary(2, InvarianceClass::LDOI, Field::Complex, seed);
    const double theta = arc(t).theta;
    if (theta > std::numbers::pi / 2.0) continue;
    ++accepted;
    const Matrix x = embed(t);
    Matrix power = x;
    for (int k = 2; k <= 3; ++k) {
      power = testing::kron(power, x);
      CHECK(std::abs(spectral_arc(dense_spectrum(power)) - k * theta) <=
            1e-9);
    }
  }
}

TEST_CASE("k-fold arcs cross pi exactly when k theta does") {
  // the discrimination-relevant face of the scaling law, valid for every
  // gate: theta(X tensor k) >= pi iff k * theta(X) >= pi
  for (int trial = 0; trial < 25; ++trial) {
    const MatrixTriple t =
        random_unitary(2, InvarianceClass::LDOI, Field::Complex, 250u + trial);
    const double theta = arc(t).theta;
    const Matrix x = embed(t);
    Matrix power = x;
    for (int k = 2; k <= 3; ++k) {
      power = testing::kron(power, x);
      const bool lhs =
          spectral_arc(dense_spectrum(power)) >= std::numbers::pi - 1e-9;
      const bool rhs = k * theta >= std::numbers::pi - 1e-9;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("identical operators have no discriminating copy count") {
  const MatrixTriple t =
      random_unitary(3, InvarianceClass::LDOI, Field::Complex, 5);
  const CopyCount c = k_copies(t, t);
  CHECK(c.equal_spectrum);
  const CopyCount b = k_bound(t, t);
  CHECK(b.equal_spectrum);
}

TEST_CASE("identity vs d=2 swap is discriminated in one shot") {
  const CopyCount c = k_copies(identity_triple(2), swap_triple(2));
  CHECK_FALSE(c.equal_spectrum);
  CHECK(c.k == 1);
}

TEST_CASE("quarter-turn phases need two copies") {
  const MatrixTriple t1 = identity_triple(2);
  const MatrixTriple t2 =
      diagonal_phase_triple(2, {0.0, std::numbers::pi / 2.0});
  REQUIRE(check_unitary(t2).is_unitary);
  const CopyCount c = k_copies(t1, t2);
  CHECK_FALSE(c.equal_spectrum);
  CHECK(c.k == 2);
}

TEST_CASE("k_copies is symmetric in its arguments") {
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3;
    const MatrixTriple t1 =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 700u + trial);
    const MatrixTriple t2 =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 800u + trial);
    const CopyCount ab = k_copies(t1, t2);
    const CopyCount ba = k_copies(t2, t1);
    CHECK(ab.equal_spectrum == ba.equal_spectrum);
    if (!ab.equal_spectrum) CHECK(ab.k == ba.k);
  }
}

TEST_CASE("the block bound dominates the true copy count") {
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;  // up to 5
    const MatrixTriple t1 =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 900u + trial);
    const MatrixTriple t2 = random_unitary(d, InvarianceClass::LDOI,
                                           Field::Complex, 1000u + trial);
    const CopyCount direct = k_copies(t1, t2);
    const CopyCount bound = k_bound(t1, t2);
    REQUIRE_FALSE(direct.equal_spectrum);
    REQUIRE_FALSE(bound.equal_spectrum);
    CHECK(direct.k <= bound.k);
  }
}

TEST_CASE("a spread-out B block already forces bound = 1") {
  // B components with opposite phases put theta >= pi into one sub-block
  const MatrixTriple t1 = diagonal_phase_triple(3, {0.0, 0.0, 0.0});
  const MatrixTriple t2 =
      diagonal_phase_triple(3, {0.0, std::numbers::pi, 0.3});
  const CopyCount bound = k_bound(t1, t2);
  const CopyCount direct = k_copies(t1, t2);
  CHECK_FALSE(bound.equal_spectrum);
  CHECK(bound.k == 1);
  CHECK(direct.k == 1);
}

TEST_CASE("local range of the identity is constantly one") {
  const LocalRangeSample s = local_range_sample(identity_triple(3), 50, 8);
  for (const Complex& z : s.values)
    CHECK(std::abs(z - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("local range of the swap is the squared overlap") {
  const int d = 3;
  const LocalRangeSample s = local_range_sample(swap_triple(d), 200, 9);
  for (int k = 0; k < 200; ++k) {
    Rng rng(derive_seed(9, std::uint64_t(k)));
    const Vector v = haar_state(d, rng);
    const Vector w = haar_state(d, rng);
    const Complex overlap = v.dot(w);  // <v|w>
    CHECK(std::abs(s.values[std::size_t(k)] - std::norm(overlap)) < 1e-12);
    CHECK(s.values[std::size_t(k)].real() >= -1e-12);
    CHECK(s.values[std::size_t(k)].real() <= 1.0 + 1e-12);
  }
}

TEST_CASE("local range values of unitary triples stay in the unit disc") {
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTriple t =
        random_unitary(4, InvarianceClass::LDOI, Field::Complex, 1200u + trial);
    const LocalRangeSample s = local_range_sample(t, 100, 1300u + trial);
    for (const Complex& z : s.values) CHECK(std::abs(z) <= 1.0 + 1e-10);
    CHECK(s.argmin >= 0);
    CHECK(s.best_v.size() == 4);
  }
}

TEST_CASE("local range sampling validates its sample count") {
  CHECK_THROWS_AS(local_range_sample(identity_triple(2), 0, 1),
                  StructuralError);
}
