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

#include "ldoi/triple.hpp"

#include <cmath>
#include <string>

namespace ldoi {

const char* to_string(InvarianceClass cls) {
  switch (cls) {
    case InvarianceClass::LDUI:
      return "ldui";
    case InvarianceClass::CLDUI:
      return "cldui";
    case InvarianceClass::LDOI:
      return "ldoi";
  }
  return "?";
}

const char* to_string(Field field) {
  return field == Field::Complex ? "complex" : "real";
}

InvarianceClass invariance_class_from_string(const std::string& s) {
  if (s == "ldui") return InvarianceClass::LDUI;
  if (s == "cldui") return InvarianceClass::CLDUI;
  if (s == "ldoi") return InvarianceClass::LDOI;
  throw StructuralError("unknown invariance class: " + s);
}

Field field_from_string(const std::string& s) {
  if (s == "c" || s == "complex") return Field::Complex;
  if (s == "r" || s == "real") return Field::Real;
  throw StructuralError("unknown field: " + s);
}

namespace {

void check_shapes(const MatrixTriple& t) {
  const int d = t.dim;
  if (d < 1) throw StructuralError("triple dimension must be >= 1");
  auto square = [d](const Matrix& m) {
    return m.rows() == d && m.cols() == d;
  };
  if (!square(t.A) || !square(t.B) || !square(t.C))
    throw StructuralError("triple matrices must all be dim x dim");
}

void check_same_dim(const MatrixTriple& t1, const MatrixTriple& t2) {
  if (t1.dim != t2.dim)
    throw StructuralError("triple dimensions differ: " +
                          std::to_string(t1.dim) + " vs " +
                          std::to_string(t2.dim));
}

}  // namespace

ValidationReport validate(const MatrixTriple& t, InvarianceClass cls) {
  check_shapes(t);
  ValidationReport rep;
  const int d = t.dim;
  auto report = [&rep](const char* what, int i, int j, double defect) {
    if (defect > kEqTol) {
      rep.ok = false;
      rep.violations.push_back({what, i, j, defect});
    }
  };
  for (int i = 0; i < d; ++i) {
    report("diag(A) != diag(B)", i, i, std::abs(t.A(i, i) - t.B(i, i)));
    report("diag(A) != diag(C)", i, i, std::abs(t.A(i, i) - t.C(i, i)));
  }
  if (cls == InvarianceClass::LDUI) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) report("B not diagonal", i, j, std::abs(t.B(i, j)));
  } else if (cls == InvarianceClass::CLDUI) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) report("C not diagonal", i, j, std::abs(t.C(i, j)));
  }
  return rep;
}

void require_valid(const MatrixTriple& t, InvarianceClass cls) {
  const ValidationReport rep = validate(t, cls);
  if (!rep.ok) {
    const auto& v = rep.violations.front();
    throw ValidationError("invalid " + std::string(to_string(cls)) +
                          " triple: " + v.constraint + " at (" +
                          std::to_string(v.i) + "," + std::to_string(v.j) +
                          "), defect " + std::to_string(v.defect));
  }
}

MatrixTriple identity_triple(int d) {
  MatrixTriple t;
  t.dim = d;
  t.A = Matrix::Ones(d, d);
  t.B = Matrix::Identity(d, d);
  t.C = Matrix::Identity(d, d);
  return t;
}

MatrixTriple swap_triple(int d) {
  MatrixTriple t;
  t.dim = d;
  t.A = Matrix::Identity(d, d);
  t.B = Matrix::Identity(d, d);
  t.C = Matrix::Ones(d, d);
  return t;
}

MatrixTriple triple_product(const MatrixTriple& t1, const MatrixTriple& t2) {
  check_same_dim(t1, t2);
  const int d = t1.dim;
  const Matrix bb = t1.B * t2.B;
  MatrixTriple out;
  out.dim = d;
  out.A = t1.A.cwiseProduct(t2.A) + t1.C.cwiseProduct(t2.C.transpose());
  out.C = t1.A.cwiseProduct(t2.C) + t1.C.cwiseProduct(t2.A.transpose());
  out.A += (bb.diagonal() - out.A.diagonal()).asDiagonal().toDenseMatrix();
  out.C += (bb.diagonal() - out.C.diagonal()).asDiagonal().toDenseMatrix();
  out.B = bb;
  return out;
}

MatrixTriple triple_compose(const MatrixTriple& t1, const MatrixTriple& t2) {
  check_same_dim(t1, t2);
  const int d = t1.dim;
  const Matrix aa = t1.A * t2.A;
  const Vector corr =
      aa.diagonal() - 2.0 * t1.A.diagonal().cwiseProduct(t2.A.diagonal());
  MatrixTriple out;
  out.dim = d;
  out.A = aa;
  out.B = t1.B.cwiseProduct(t2.B) + t1.C.cwiseProduct(t2.C.transpose());
  out.C = t1.B.cwiseProduct(t2.C) + t1.C.cwiseProduct(t2.B.transpose());
  out.B += corr.asDiagonal().toDenseMatrix();
  out.C += corr.asDiagonal().toDenseMatrix();
  return out;
}

MatrixTriple symmetry(const MatrixTriple& t, SymmetryOp op) {
  check_shapes(t);
  MatrixTriple out;
  out.dim = t.dim;
  switch (op) {
    case SymmetryOp::Transpose:
      out.A = t.A;
      out.B = t.B.transpose();
      out.C = t.C.transpose();
      break;
    case SymmetryOp::Adjoint:
      out.A = t.A.conjugate();
      out.B = t.B.adjoint();
      out.C = t.C.adjoint();
      break;
    case SymmetryOp::Realign:
      out.A = t.B;
      out.B = t.A;
      out.C = t.C;
      break;
    case SymmetryOp::PartialTranspose:
      out.A = t.A;
      out.B = t.C;
      out.C = t.B;
      break;
  }
  return out;
}

MatrixTriple add(const MatrixTriple& t1, const MatrixTriple& t2) {
  check_same_dim(t1, t2);
  return {t1.dim, t1.A + t2.A, t1.B + t2.B, t1.C + t2.C};
}

MatrixTriple scale(Complex alpha, const MatrixTriple& t) {
  return {t.dim, alpha * t.A, alpha * t.B, alpha * t.C};
}

MatrixTriple random_triple(int d, InvarianceClass cls, Field field,
                           Rng& rng) {
  auto draw = [&]() -> Complex {
    return field == Field::Complex ? rng.gaussian_complex()
                                   : Complex(rng.gaussian(), 0.0);
  };
  MatrixTriple t;
  t.dim = d;
  t.A = Matrix(d, d);
  t.B = Matrix(d, d);
  t.C = Matrix(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      t.A(i, j) = draw();
      t.B(i, j) = draw();
      t.C(i, j) = draw();
    }
  t.B.diagonal() = t.A.diagonal();
  t.C.diagonal() = t.A.diagonal();
  // Matrix(...) evaluates into fresh storage; assigning the wrapper
  // directly would zero the destination before reading its diagonal
  if (cls == InvarianceClass::LDUI) {
    t.B = Matrix(t.B.diagonal().asDiagonal());
  } else if (cls == InvarianceClass::CLDUI) {
    t.C = Matrix(t.C.diagonal().asDiagonal());
  }
  return t;
}

}  // namespace ldoi
