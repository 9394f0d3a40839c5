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

#include "ldoi/embed.hpp"
#include "ldoi/entangle.hpp"
#include "ldoi/special.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"
#include "support.hpp"

using namespace ldoi;

TEST_CASE("swap profile: maximal operator entanglement, zero power") {
  for (int d : {2, 3, 5}) {
    const EntanglementProfile p = profile_closed_form(swap_triple(d));
    CHECK(p.e_op == doctest::Approx(swap_entanglement(d)).epsilon(1e-12));
    CHECK(p.e_op_swapped == doctest::Approx(0.0));
    CHECK(p.e_power == doctest::Approx(0.0));
    CHECK(p.typicality == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("identity profile vanishes") {
  const EntanglementProfile p = profile_closed_form(identity_triple(4));
  CHECK(p.e_op == doctest::Approx(0.0));
  CHECK(p.e_power == doctest::Approx(0.0));
  CHECK(p.typicality == doctest::Approx(0.0));
}

TEST_CASE("closed form agrees with the dense oracle") {
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 5;
    const MatrixTriple t =
        random_unitary(d, InvarianceClass::LDOI,
                       trial % 2 ? Field::Complex : Field::Real, 80u + trial);
    const EntanglementProfile a = profile_closed_form(t);
    const EntanglementProfile b = profile_oracle(t);
    CHECK(std::abs(a.e_op - b.e_op) <= 1e-9);
    CHECK(std::abs(a.e_op_swapped - b.e_op_swapped) <= 1e-9);
    CHECK(std::abs(a.e_power - b.e_power) <= 1e-9);
    CHECK(std::abs(a.typicality - b.typicality) <= 1e-9);
    // bounds
    CHECK(a.e_op >= -1e-12);
    CHECK(a.e_op <= swap_entanglement(d) + 1e-12);
    CHECK(a.e_power >= -1e-12);
    CHECK(a.e_power <= 1.0 + 1e-12);
    CHECK(a.typicality >= -1e-12);
    CHECK(a.typicality <= 1.0 + 1e-12);
  }
}

TEST_CASE("non-unitary input is rejected") {
  Rng rng(9);
  const MatrixTriple t =
      random_triple(3, InvarianceClass::LDOI, Field::Complex, rng);
  CHECK_THROWS_AS(profile_closed_form(t), ValidationError);
  CHECK_THROWS_AS(profile_oracle(t), ValidationError);
}

TEST_CASE("profile is invariant under diagonal-phase local factors") {
  // Y (x) Z with diagonal unitary Y, Z is itself in the class; multiplying
  // by it must leave every profile entry unchanged
  Rng rng(21);
  const int d = 3;
  const MatrixTriple t =
      random_unitary(d, InvarianceClass::LDOI, Field::Complex, 303);
  MatrixTriple local;
  local.dim = d;
  local.A = Matrix::Zero(d, d);
  local.B = Matrix::Zero(d, d);
  local.C = Matrix::Zero(d, d);
  Vector y(d), z(d);
  for (int i = 0; i < d; ++i) {
    y(i) = rng.phase();
    z(i) = rng.phase();
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) local.A(i, j) = y(i) * z(j);
  local.B.diagonal() = local.A.diagonal();
  local.C.diagonal() = local.A.diagonal();
  REQUIRE(check_unitary(local).is_unitary);

  const EntanglementProfile base = profile_closed_form(t);
  const EntanglementProfile moved =
      profile_closed_form(triple_product(local, t));
  CHECK(std::abs(base.e_op - moved.e_op) <= 1e-10);
  CHECK(std::abs(base.e_op_swapped - moved.e_op_swapped) <= 1e-10);
  CHECK(std::abs(base.e_power - moved.e_power) <= 1e-10);
  CHECK(std::abs(base.typicality - moved.typicality) <= 1e-10);
}

TEST_CASE("typicality vanishes exactly on product gates") {
  // diagonal (x) diagonal products have g_t = 0; generic gates do not
  Rng rng(55);
  const int d = 3;
  MatrixTriple prod;
  prod.dim = d;
  prod.A = Matrix::Zero(d, d);
  prod.B = Matrix::Zero(d, d);
  prod.C = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod.A(i, j) = rng.phase() * rng.phase();
  // rank-one A: y z^T from fresh phase vectors
  Vector y(d), z(d);
  for (int i = 0; i < d; ++i) {
    y(i) = rng.phase();
    z(i) = rng.phase();
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod.A(i, j) = y(i) * z(j);
  prod.B.diagonal() = prod.A.diagonal();
  prod.C.diagonal() = prod.A.diagonal();
  REQUIRE(check_unitary(prod).is_unitary);
  CHECK(std::abs(profile_closed_form(prod).typicality) <= 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTriple t = random_unitary(3, InvarianceClass::LDOI,
                                          Field::Complex, 4000u + trial);
    CHECK(profile_closed_form(t).typicality > 1e-6);
  }
}

TEST_CASE("maximal operator entanglement characterizes dual unitaries") {
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 4;
    MatrixTriple t;
    if (trial % 2 == 0) {
      Rng rng(3100u + trial);
      t = make_dual_projection(haar_projection(d, 1 + trial % d, rng));
    } else {
      t = random_unitary(d, InvarianceClass::LDOI, Field::Complex,
                         3200u + trial);
    }
    const bool maximal = std::abs(profile_closed_form(t).e_op -
                                  swap_entanglement(d)) <= 1e-9;
    CHECK(maximal == check_special(t).is_dual);
  }
}

TEST_CASE("fourier dual LDUI attains d/(d+1) and J_d attains zero") {
  for (int d = 2; d <= 8; ++d) {
    const MaxEpResult r = max_ep_dual_ldui(fourier_matrix(d));
    CHECK(r.is_max);
    CHECK(r.e_power == doctest::Approx(double(d) / (d + 1)).epsilon(1e-12));
  }
  const MaxEpResult flat = max_ep_dual_ldui(Matrix::Ones(4, 4));
  CHECK_FALSE(flat.is_max);
  CHECK(flat.e_power == doctest::Approx(0.0));

  Matrix had(2, 2);
  had << 1, 1, 1, -1;
  const MaxEpResult h2 = max_ep_dual_ldui(had);
  CHECK(h2.is_max);
  CHECK(h2.e_power == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("max_ep_dual_ldui rejects non-unimodular input") {
  Matrix c = Matrix::Ones(3, 3);
  c(2, 2) = 0.2;
  CHECK_THROWS_AS(max_ep_dual_ldui(c), ValidationError);
}

TEST_CASE("profile consistency against E(XS) computed through the product") {
  // E(XS) can also be reached by realigning the product triple with swap
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3;
    const MatrixTriple t =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 777u + trial);
    const MatrixTriple xs = triple_product(t, swap_triple(d));
    const EntanglementProfile p = profile_closed_form(t);
    const EntanglementProfile ps = profile_closed_form(xs);
    CHECK(std::abs(p.e_op_swapped - ps.e_op) <= 1e-10);
    CHECK(std::abs(p.e_op - ps.e_op_swapped) <= 1e-10);
  }
}

TEST_CASE("monte-carlo estimator validates the closed form at d = 2") {
  const MatrixTriple t =
      random_unitary(2, InvarianceClass::LDOI, Field::Complex, 1234);
  const double exact = profile_closed_form(t).e_power;
  const double mc = testing::mc_entangling_power(embed(t), 2, 20000, 555);
  CHECK(std::abs(mc - exact) < 5e-3);
}
