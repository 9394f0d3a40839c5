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

#include "ldoi/unitary.hpp"

#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "ldoi/numerics.hpp"
#include "ldoi/rng.hpp"
#include "ldoi/triple.hpp"

namespace ldoi {

UnitarityReport check_unitary(const MatrixTriple& t, Field field) {
  require_valid(t);
  if (field == Field::Real &&
      !(is_real(t.A) && is_real(t.B) && is_real(t.C)))
    throw ValidationError("real-field check on a triple with complex entries");

  const int d = t.dim;
  UnitarityReport rep;
  rep.b_defect = unitarity_defect(t.B);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Eigen::Matrix2cd blk;
      blk << t.A(i, j), t.C(i, j), t.C(j, i), t.A(j, i);
      const double pd =
          (blk.adjoint() * blk - Eigen::Matrix2cd::Identity()).norm();
      if (pd > rep.pair_defect) {
        rep.pair_defect = pd;
        rep.worst_pair = {i, j};
      }

      const double a2 = std::norm(t.A(i, j));
      const double c2 = std::norm(t.C(i, j));
      rep.norm_defect = std::max(rep.norm_defect, std::abs(a2 + c2 - 1.0));

      // Recover the pair phase from the larger of A_ij, C_ij; the norm
      // condition already flags pairs where both vanish.
      PairPhase ph{i, j, false, Complex(1.0, 0.0)};
      const Complex src = (a2 >= c2) ? t.A(i, j) : t.C(i, j);
      if (std::abs(src) > 1e-12) {
        const Complex raw = (a2 >= c2)
                                ? t.A(j, i) / std::conj(t.A(i, j))
                                : -t.C(j, i) / std::conj(t.C(i, j));
        const double mag = std::abs(raw);
        ph.present = mag > 0.0;
        ph.omega = ph.present ? raw / mag : Complex(1.0, 0.0);
        double pr = std::abs(mag - 1.0);
        pr = std::max(pr,
                      std::abs(t.A(j, i) - ph.omega * std::conj(t.A(i, j))));
        pr = std::max(pr,
                      std::abs(t.C(j, i) + ph.omega * std::conj(t.C(i, j))));
        rep.phase_defect = std::max(rep.phase_defect, pr);
      } else if (std::abs(t.A(j, i)) > 1e-12 || std::abs(t.C(j, i)) > 1e-12) {
        rep.phase_defect = std::max(
            rep.phase_defect,
            std::max(std::abs(t.A(j, i)), std::abs(t.C(j, i))));
      }
      rep.phase_witnesses.push_back(ph);
    }

  rep.is_unitary = rep.b_defect <= kUnitaryTol &&
                   rep.pair_defect <= kUnitaryTol &&
                   rep.norm_defect <= kUnitaryTol &&
                   rep.phase_defect <= kUnitaryTol;
  return rep;
}

MatrixTriple random_unitary(int d, InvarianceClass cls, Field field,
                            std::uint64_t seed) {
  if (d < 1) throw StructuralError("dimension must be >= 1");
  Rng rng(derive_seed(seed, 0x1d01));
  const bool cx = field == Field::Complex;

  MatrixTriple t;
  t.dim = d;
  t.A = Matrix::Zero(d, d);
  t.B = Matrix::Zero(d, d);
  t.C = Matrix::Zero(d, d);

  if (cls == InvarianceClass::LDUI) {
    for (int i = 0; i < d; ++i)
      t.B(i, i) = cx ? rng.phase() : Complex(rng.sign(), 0.0);
  } else {
    t.B = cx ? haar_unitary(d, rng) : haar_orthogonal(d, rng);
  }

  if (cls == InvarianceClass::CLDUI) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) t.A(i, j) = cx ? rng.phase() : Complex(rng.sign(), 0.0);
    t.C = t.B.diagonal().asDiagonal();  // C diagonal is forced by the class
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const Matrix blk = cx ? haar_unitary(2, rng) : haar_orthogonal(2, rng);
        t.A(i, j) = blk(0, 0);
        t.C(i, j) = blk(0, 1);
        t.C(j, i) = blk(1, 0);
        t.A(j, i) = blk(1, 1);
      }
    t.C.diagonal() = t.B.diagonal();
  }
  t.A.diagonal() = t.B.diagonal();
  return t;
}

long long subgroup_dim(int d, InvarianceClass cls) {
  if (d < 1) throw StructuralError("dimension must be >= 1");
  const long long n = d;
  const long long pairs = n * (n - 1) / 2;
  switch (cls) {
    case InvarianceClass::LDOI:
      return n * n + 4 * pairs;
    case InvarianceClass::LDUI:
      return n + 4 * pairs;
    case InvarianceClass::CLDUI:
      return n * n + n * (n - 1);
  }
  return 0;
}

namespace {

// Free complex parameters of the subspace: the shared diagonal plus the
// class-dependent off-diagonal entries.
struct Params {
  int d;
  InvarianceClass cls;

  int count() const {
    const int off = d * d - d;
    switch (cls) {
      case InvarianceClass::LDOI:
        return d + 3 * off;
      case InvarianceClass::LDUI:
      case InvarianceClass::CLDUI:
        return d + 2 * off;
    }
    return 0;
  }

  Eigen::VectorXd pack(const MatrixTriple& t) const {
    Eigen::VectorXd p(2 * count());
    int k = 0;
    auto put = [&](Complex z) {
      p(k++) = z.real();
      p(k++) = z.imag();
    };
    for (int i = 0; i < d; ++i) put(t.A(i, i));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) put(t.A(i, j));
    if (cls != InvarianceClass::LDUI)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) put(t.B(i, j));
    if (cls != InvarianceClass::CLDUI)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) put(t.C(i, j));
    return p;
  }

  MatrixTriple unpack(const Eigen::VectorXd& p) const {
    MatrixTriple t;
    t.dim = d;
    t.A = Matrix::Zero(d, d);
    t.B = Matrix::Zero(d, d);
    t.C = Matrix::Zero(d, d);
    int k = 0;
    auto get = [&]() {
      Complex z(p(k), p(k + 1));
      k += 2;
      return z;
    };
    for (int i = 0; i < d; ++i) t.A(i, i) = get();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) t.A(i, j) = get();
    if (cls != InvarianceClass::LDUI)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) t.B(i, j) = get();
    if (cls != InvarianceClass::CLDUI)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) t.C(i, j) = get();
    t.B.diagonal() = t.A.diagonal();
    t.C.diagonal() = t.A.diagonal();
    return t;
  }

  // Independent real components of the unitarity constraints.
  Eigen::VectorXd constraints(const MatrixTriple& t) const {
    std::vector<double> out;
    auto push_hermitian = [&out](const Matrix& h) {
      for (int i = 0; i < h.rows(); ++i) out.push_back(h(i, i).real());
      for (int i = 0; i < h.rows(); ++i)
        for (int j = i + 1; j < h.cols(); ++j) {
          out.push_back(h(i, j).real());
          out.push_back(h(i, j).imag());
        }
    };
    if (cls == InvarianceClass::LDUI) {
      for (int i = 0; i < d; ++i) out.push_back(std::norm(t.B(i, i)) - 1.0);
    } else {
      push_hermitian(t.B.adjoint() * t.B - Matrix::Identity(d, d));
    }
    if (cls == InvarianceClass::CLDUI) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) out.push_back(std::norm(t.A(i, j)) - 1.0);
    } else {
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          Eigen::Matrix2cd blk;
          blk << t.A(i, j), t.C(i, j), t.C(j, i), t.A(j, i);
          push_hermitian(blk.adjoint() * blk -
                         Eigen::Matrix2cd::Identity());
        }
    }
    return Eigen::Map<Eigen::VectorXd>(out.data(), long(out.size()));
  }
};

}  // namespace

long long tangent_dim_probe(int d, InvarianceClass cls, std::uint64_t seed) {
  const Params par{d, cls};
  const MatrixTriple t0 = random_unitary(d, cls, Field::Complex, seed);
  const Eigen::VectorXd p0 = par.pack(t0);
  const int n = int(p0.size());
  const double eps = 1e-5;

  Eigen::MatrixXd jac(par.constraints(t0).size(), n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd hi = p0, lo = p0;
    hi(k) += eps;
    lo(k) -= eps;
    jac.col(k) =
        (par.constraints(par.unpack(hi)) - par.constraints(par.unpack(lo))) /
        (2.0 * eps);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  const double thr = 1e-6 * sv(0);
  long long rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > thr) ++rank;
  return n - rank;
}

}  // namespace ldoi
