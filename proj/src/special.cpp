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

#include "ldoi/special.hpp"

#include <cmath>
#include <sstream>

#include "ldoi/numerics.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace ldoi {

namespace {

// Joint phase residual for the relations X_ji = sx * omega * conj(X_ij)
// over (X, sx) pairs, with omega recovered from the largest participating
// entry; returns the worst residual.
struct PhaseProbe {
  Complex omega{1.0, 0.0};
  double defect = 0.0;
  bool recovered = false;
};

PhaseProbe joint_phase(const MatrixTriple& t, int i, int j, double sa,
                       double sb, double sc) {
  // relations: A_ji = sa*w*conj(A_ij), B_ji = sb*w*conj(B_ij),
  //            C_ji = sc*w*conj(C_ij)
  const Complex es[3] = {t.A(i, j), t.B(i, j), t.C(i, j)};
  const Complex fs[3] = {t.A(j, i), t.B(j, i), t.C(j, i)};
  const double ss[3] = {sa, sb, sc};
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(es[k]) > std::abs(es[best])) best = k;
  PhaseProbe probe;
  if (std::abs(es[best]) < 1e-12) {
    // all forward entries vanish; any surviving reverse entry breaks the
    // relation outright
    for (int k = 0; k < 3; ++k)
      probe.defect = std::max(probe.defect, std::abs(fs[k]));
    return probe;
  }
  const Complex raw = fs[best] / (ss[best] * std::conj(es[best]));
  const double mag = std::abs(raw);
  probe.recovered = mag > 0.0;
  probe.omega = probe.recovered ? raw / mag : Complex(1.0, 0.0);
  probe.defect = std::abs(mag - 1.0);
  for (int k = 0; k < 3; ++k)
    probe.defect = std::max(
        probe.defect,
        std::abs(fs[k] - ss[k] * probe.omega * std::conj(es[k])));
  return probe;
}

}  // namespace

DualityReport check_special(const MatrixTriple& t) {
  require_valid(t);
  const int d = t.dim;
  DualityReport rep;

  // definitional route: unitarity of the triple and of its realignment /
  // partial transpose
  const bool base = check_unitary(t).is_unitary;
  rep.is_dual =
      base && check_unitary(symmetry(t, SymmetryOp::Realign)).is_unitary;
  rep.is_pt = base &&
              check_unitary(symmetry(t, SymmetryOp::PartialTranspose))
                  .is_unitary;
  rep.is_perfect = rep.is_dual && rep.is_pt;

  // direct condition lists: A (resp. C) unitary on top of B, plus per pair
  // the 2x2 blocks pairing A with C and B with C (dual), or A with C and A
  // with B (PT)
  rep.a_defect = unitarity_defect(t.A);
  rep.b_defect = unitarity_defect(t.B);
  rep.c_defect = unitarity_defect(t.C);
  double dual_blocks = 0.0, pt_blocks = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto block_defect = [&](const Matrix& x, const Matrix& y) {
        Eigen::Matrix2cd blk;
        blk << x(i, j), y(i, j), y(j, i), x(j, i);
        return (blk.adjoint() * blk - Eigen::Matrix2cd::Identity()).norm();
      };
      dual_blocks = std::max(
          {dual_blocks, block_defect(t.A, t.C), block_defect(t.B, t.C)});
      pt_blocks = std::max(
          {pt_blocks, block_defect(t.A, t.C), block_defect(t.A, t.B)});

      // diagnostic scalar defects: modulus matching and phase witnesses
      const double a2 = std::norm(t.A(i, j));
      const double b2 = std::norm(t.B(i, j));
      const double c2 = std::norm(t.C(i, j));
      rep.dual_modulus_defect = std::max(
          {rep.dual_modulus_defect, std::abs(a2 - b2), std::abs(a2 + c2 - 1.0)});
      rep.pt_modulus_defect = std::max(
          {rep.pt_modulus_defect, std::abs(b2 - c2), std::abs(a2 + c2 - 1.0)});
      rep.dual_phase_defect = std::max(
          rep.dual_phase_defect, joint_phase(t, i, j, 1.0, 1.0, -1.0).defect);
      // the PT phases of B and C are linked through A only when A_ij != 0;
      // otherwise they are independent and the block defects already cover
      // the remaining conditions
      if (std::abs(t.A(i, j)) > 1e-12)
        rep.pt_phase_defect = std::max(
            rep.pt_phase_defect, joint_phase(t, i, j, 1.0, -1.0, -1.0).defect);
    }
  rep.dual_conditions = rep.a_defect <= kUnitaryTol &&
                        rep.b_defect <= kUnitaryTol &&
                        dual_blocks <= kUnitaryTol;
  rep.pt_conditions = rep.b_defect <= kUnitaryTol &&
                      rep.c_defect <= kUnitaryTol &&
                      pt_blocks <= kUnitaryTol;
  rep.routes_agree = rep.dual_conditions == rep.is_dual &&
                     rep.pt_conditions == rep.is_pt;
  return rep;
}

namespace {

MatrixTriple dual_from_hermitian_part(const Matrix& ab, Complex omega,
                                      const Matrix* phases) {
  const int d = int(ab.rows());
  MatrixTriple t;
  t.dim = d;
  t.A = ab;
  t.B = ab;
  t.C = Matrix::Zero(d, d);
  t.C.diagonal() = ab.diagonal();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double rem = 1.0 - std::norm(ab(i, j));
      if (rem < -kUnitaryTol)
        throw ToleranceError(
            "entry of 2P - 1 exceeds unit modulus; P is not a projection");
      if (rem <= kUnitaryTol) continue;  // modulus already exhausted by A
      Complex ph(1.0, 0.0);
      if (phases) {
        ph = (*phases)(i, j);
        const double m = std::abs(ph);
        if (std::abs(m - 1.0) > kUnitaryTol)
          throw ValidationError("phase override must be unimodular");
        ph /= m;
      }
      t.C(i, j) = std::sqrt(rem) * ph;
      t.C(j, i) = -omega * std::conj(t.C(i, j));
    }
  return t;
}

}  // namespace

MatrixTriple make_dual_projection(const Matrix& p, const Matrix* phases) {
  return make_dual_phase_projection(p, Complex(1.0, 0.0), phases);
}

MatrixTriple make_dual_phase_projection(const Matrix& p, Complex omega,
                                        const Matrix* phases) {
  if (p.rows() != p.cols()) throw StructuralError("projection must be square");
  const double herm = (p - p.adjoint()).norm();
  const double idem = (p * p - p).norm();
  if (herm > kUnitaryTol || idem > kUnitaryTol) {
    std::ostringstream msg;
    msg << "not an orthogonal projection: ||P-P'|| = " << herm
        << ", ||P^2-P|| = " << idem;
    throw ValidationError(msg.str());
  }
  const double om = std::abs(omega);
  if (std::abs(om - 1.0) > kUnitaryTol)
    throw ValidationError("omega must be unimodular");
  omega /= om;
  const int d = int(p.rows());
  // principal square root of the pair phase
  const Complex root = std::exp(Complex(0.0, std::arg(omega) / 2.0));
  const Matrix ab = root * (2.0 * p - Matrix::Identity(d, d));
  return dual_from_hermitian_part(ab, omega, phases);
}

MatrixTriple make_dual_ldui(const Matrix& c) {
  if (c.rows() != c.cols()) throw StructuralError("C must be square");
  const int d = int(c.rows());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (std::abs(std::abs(c(i, j)) - 1.0) > kUnitaryTol)
        throw ValidationError("all entries of C must be unimodular");
  MatrixTriple t;
  t.dim = d;
  t.A = c.diagonal().asDiagonal();
  t.B = t.A;
  t.C = c;
  return t;
}

Matrix haar_projection(int d, int rank, Rng& rng) {
  if (rank < 0 || rank > d) throw StructuralError("projection rank out of range");
  const Matrix u = haar_unitary(d, rng);
  const Matrix v = u.leftCols(rank);
  return v * v.adjoint();
}

PerfectWitness perfect_witness(const MatrixTriple& t) {
  require_valid(t);
  PerfectWitness w;
  if (t.dim < 2) {
    w.clause = PerfectWitness::Clause::Vacuous;
    w.detail = "no off-diagonal pairs at d = 1";
    return w;
  }
  const double target = 1.0 / std::sqrt(2.0);
  const double tol = 1e-8;
  const int d = t.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      // being simultaneously dual and PT unitary forces every off-diagonal
      // modulus to 1/sqrt(2)
      const Complex entries[6] = {t.A(i, j), t.A(j, i), t.B(i, j),
                                  t.B(j, i), t.C(i, j), t.C(j, i)};
      const char names[6] = {'A', 'A', 'B', 'B', 'C', 'C'};
      for (int k = 0; k < 6; ++k) {
        const double m = std::abs(entries[k]);
        if (std::abs(m - target) > tol) {
          w.clause = PerfectWitness::Clause::Modulus;
          w.pair = {i, j};
          w.matrix = names[k];
          w.value = m;
          std::ostringstream msg;
          msg << "|" << names[k] << "_" << (k % 2 ? j : i) << (k % 2 ? i : j)
              << "| = " << m << " but dual+PT unitarity require 1/sqrt(2)";
          w.detail = msg.str();
          return w;
        }
      }
      // moduli check passed: the B relations force the dual phase omega and
      // the PT phase lambda to agree, and then the A and C relations cannot
      // both hold (they need lambda = -omega)
      const Complex raw = t.B(j, i) / std::conj(t.B(i, j));
      const Complex omega = raw / std::abs(raw);
      const double dual_a = std::abs(t.A(j, i) - omega * std::conj(t.A(i, j)));
      const double pt_a = std::abs(t.A(j, i) + omega * std::conj(t.A(i, j)));
      const double dual_c = std::abs(t.C(j, i) + omega * std::conj(t.C(i, j)));
      const double pt_c = std::abs(t.C(j, i) - omega * std::conj(t.C(i, j)));
      w.dual_phase_defect = std::max(dual_a, dual_c);
      w.pt_phase_defect = std::max(pt_a, pt_c);
      if (w.dual_phase_defect > tol || w.pt_phase_defect > tol) {
        w.clause = PerfectWitness::Clause::PhaseContradiction;
        w.pair = {i, j};
        std::ostringstream msg;
        msg << "with omega = lambda fixed by B at pair (" << i << "," << j
            << "), dual unitarity leaves residual " << w.dual_phase_defect
            << " and PT unitarity residual " << w.pt_phase_defect
            << "; both would need to vanish, yet their sum is at least"
               " sqrt(2)";
        w.detail = msg.str();
        return w;
      }
    }
  w.clause = PerfectWitness::Clause::Satisfied;
  w.detail = "no requirement violated within tolerance";
  return w;
}

}  // namespace ldoi
