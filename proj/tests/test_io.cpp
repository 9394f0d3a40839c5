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

#include <sstream>

#include "ldoi/json_io.hpp"
#include "ldoi/unitary.hpp"

using namespace ldoi;
using nlohmann::json;

TEST_CASE("triple JSON round trip is lossless and deterministic") {
  const MatrixTriple t =
      random_unitary(3, InvarianceClass::LDOI, Field::Complex, 2718);
  const json j = triple_to_json(t);
  const MatrixTriple back = triple_from_json(j);
  CHECK(back.dim == t.dim);
  CHECK((back.A - t.A).norm() == 0.0);
  CHECK((back.B - t.B).norm() == 0.0);
  CHECK((back.C - t.C).norm() == 0.0);
  CHECK(j.dump() == triple_to_json(back).dump());
}

TEST_CASE("triple JSON validates its shape") {
  json j = triple_to_json(random_unitary(2, InvarianceClass::LDOI,
                                         Field::Complex, 3));
  j["d"] = 3;
  CHECK_THROWS_AS(triple_from_json(j), StructuralError);
  json missing = j;
  missing.erase("B");
  CHECK_THROWS_AS(triple_from_json(missing), ValidationError);
}

TEST_CASE("matrices accept plain real and [re, im] entries") {
  const Matrix m = matrix_from_json(json::parse("[[1, -1], [[0, 1], 2]]"));
  CHECK(m(0, 0) == Complex(1.0, 0.0));
  CHECK(m(0, 1) == Complex(-1.0, 0.0));
  CHECK(m(1, 0) == Complex(0.0, 1.0));
  CHECK(m(1, 1) == Complex(2.0, 0.0));
}

TEST_CASE("dense CSV interleaves re and im columns") {
  Matrix m(1, 2);
  m(0, 0) = Complex(1.5, -2.0);
  m(0, 1) = Complex(0.0, 3.0);
  std::ostringstream ss;
  write_dense_csv(ss, m);
  CHECK(ss.str() == "1.5,-2,0,3\n");
}

TEST_CASE("sign matrix grids parse and reject malformed input") {
  const SignMatrix m = sign_matrix_from_text("++-\n+-+\n-++\n");
  CHECK(m.dim == 3);
  CHECK(m.entry(0, 2) == -1);
  CHECK(m.entry(1, 1) == -1);
  CHECK(m.entry(2, 0) == -1);
  CHECK(m.entry(0, 0) == 1);
  CHECK_THROWS_AS(sign_matrix_from_text("++\n+\n"), ValidationError);
  CHECK_THROWS_AS(sign_matrix_from_text("++\n+-\n--\n"), ValidationError);
  CHECK_THROWS_AS(sign_matrix_from_text("+x\n--\n"), ValidationError);
}

TEST_CASE("digest is stable and content sensitive") {
  CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
  CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
  CHECK(fnv1a_hex("").size() == 16);
}
