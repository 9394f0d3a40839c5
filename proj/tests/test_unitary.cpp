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
#include "ldoi/numerics.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"
#include "support.hpp"

using namespace ldoi;

TEST_CASE("swap and identity are unitary with the expected witnesses") {
  // swap has A_ij = 0, C_ij = C_ji = 1, so C_ji = -omega conj(C_ij) pins
  // omega = -1; the identity has A = J and omega = +1
  const UnitarityReport sw = check_unitary(swap_triple(4));
  CHECK(sw.is_unitary);
  CHECK(sw.norm_defect <= 1e-15);
  for (const auto& ph : sw.phase_witnesses) {
    CHECK(ph.present);
    CHECK(std::abs(ph.omega - Complex(-1.0, 0.0)) < 1e-14);
  }
  const UnitarityReport id = check_unitary(identity_triple(4));
  CHECK(id.is_unitary);
  for (const auto& ph : id.phase_witnesses)
    CHECK(std::abs(ph.omega - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("norm condition violations are caught") {
  MatrixTriple t = identity_triple(3);  // A = J, B = C = 1
  t.C(0, 1) = 1.0;                      // now |A_01|^2 + |C_01|^2 = 2
  const UnitarityReport rep = check_unitary(t);
  CHECK_FALSE(rep.is_unitary);
  CHECK(rep.norm_defect == doctest::Approx(1.0));
}

TEST_CASE("haar samples of every class and field pass both unitarity routes") {
  for (auto cls : {InvarianceClass::LDOI, InvarianceClass::LDUI,
                   InvarianceClass::CLDUI}) {
    for (auto field : {Field::Complex, Field::Real}) {
      for (int trial = 0; trial < 12; ++trial) {
        const int d = 2 + trial % 5;
        const MatrixTriple t =
            random_unitary(d, cls, field, 7000u + 13u * trial);
        CHECK(validate(t, cls).ok);
        CHECK(check_unitary(t, field).is_unitary);
        CHECK(unitarity_defect(embed(t)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("triple-level unitarity agrees with the dense test") {
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 5;
    MatrixTriple t;
    if (trial % 2 == 0) {
      t = random_unitary(d, InvarianceClass::LDOI, Field::Complex,
                         200u + trial);
    } else {
      Rng rng(300u + trial);
      t = random_triple(d, InvarianceClass::LDOI, Field::Complex, rng);
    }
    const bool triple_route = check_unitary(t).is_unitary;
    const bool dense_route = unitarity_defect(embed(t)) <= kUnitaryTol * d;
    CHECK(triple_route == dense_route);
  }
}

TEST_CASE("ldui samples have a diagonal of unimodular phases") {
  const MatrixTriple t =
      random_unitary(5, InvarianceClass::LDUI, Field::Complex, 42);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j)
      if (i != j) CHECK(std::abs(t.B(i, j)) == 0.0);
    CHECK(std::abs(std::abs(t.B(i, i)) - 1.0) < 1e-14);
    CHECK(t.A(i, i) == t.B(i, i));
    CHECK(t.C(i, i) == t.B(i, i));
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const MatrixTriple a =
      random_unitary(4, InvarianceClass::LDOI, Field::Complex, 123);
  const MatrixTriple b =
      random_unitary(4, InvarianceClass::LDOI, Field::Complex, 123);
  CHECK((a.A - b.A).norm() == 0.0);
  CHECK((a.B - b.B).norm() == 0.0);
  CHECK((a.C - b.C).norm() == 0.0);
  const MatrixTriple c =
      random_unitary(4, InvarianceClass::LDOI, Field::Complex, 124);
  CHECK((a.A - c.A).norm() > 0.0);
}

TEST_CASE("group closure and inverses through the product") {
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 4;
    const MatrixTriple t1 =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 900u + trial);
    const MatrixTriple t2 =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 950u + trial);
    CHECK(check_unitary(triple_product(t1, t2)).is_unitary);
    const MatrixTriple inv = triple_product(t1, symmetry(t1, SymmetryOp::Adjoint));
    const MatrixTriple id = identity_triple(d);
    CHECK((inv.A - id.A).norm() < 1e-9);
    CHECK((inv.B - id.B).norm() < 1e-9);
    CHECK((inv.C - id.C).norm() < 1e-9);
  }
}

TEST_CASE("phase witnesses from A and C agree when both entries are present") {
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3;
    const MatrixTriple t =
        random_unitary(d, InvarianceClass::LDOI, Field::Complex, 1100u + trial);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (std::abs(t.A(i, j)) > kUnitaryTol &&
            std::abs(t.C(i, j)) > kUnitaryTol) {
          const Complex from_a = t.A(j, i) / std::conj(t.A(i, j));
          const Complex from_c = -t.C(j, i) / std::conj(t.C(i, j));
          CHECK(std::abs(from_a - from_c) < 1e-8);
        }
      }
  }
}

TEST_CASE("real-field check requires real entries") {
  const MatrixTriple t =
      random_unitary(3, InvarianceClass::LDOI, Field::Complex, 5);
  CHECK_THROWS_AS(check_unitary(t, Field::Real), ValidationError);
  const MatrixTriple r =
      random_unitary(3, InvarianceClass::LDOI, Field::Real, 5);
  CHECK(check_unitary(r, Field::Real).is_unitary);
}

TEST_CASE("subgroup dimensions match the block parametrization counts") {
  CHECK(subgroup_dim(2, InvarianceClass::LDOI) == 8);
  CHECK(subgroup_dim(3, InvarianceClass::LDUI) == 15);
  CHECK(subgroup_dim(3, InvarianceClass::LDOI) == 21);
  CHECK(subgroup_dim(3, InvarianceClass::CLDUI) == 15);
  CHECK(subgroup_dim(4, InvarianceClass::CLDUI) == 28);
}

TEST_CASE("tangent-space probe confirms the dimension formulas") {
  for (int d = 2; d <= 4; ++d)
    for (auto cls : {InvarianceClass::LDOI, InvarianceClass::LDUI,
                     InvarianceClass::CLDUI})
      CHECK(tangent_dim_probe(d, cls, 77u + d) == subgroup_dim(d, cls));
}
