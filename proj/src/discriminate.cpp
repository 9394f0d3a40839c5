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

#include "ldoi/discriminate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ldoi/embed.hpp"
#include "ldoi/rng.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace ldoi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// below this arc two spectra count as equal up to a global phase
constexpr double kArcZero = 1e-9;

// eigenvalues of [[a, c], [c', a']]; the discriminant is formed as
// (a - a')^2 + 4 c c' so near-degenerate blocks do not cancel
std::pair<Complex, Complex> eig2x2(Complex a, Complex c, Complex cp,
                                   Complex ap) {
  const Complex half_tr = (a + ap) / 2.0;
  const Complex root = std::sqrt((a - ap) * (a - ap) + 4.0 * c * cp) / 2.0;
  return {half_tr + root, half_tr - root};
}

std::vector<Complex> block_spectrum(const MatrixTriple& t) {
  std::vector<Complex> eig;
  {
    Eigen::ComplexEigenSolver<Matrix> es(t.B, false);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      eig.push_back(es.eigenvalues()(k));
  }
  const int d = t.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const auto [lo, hi] = eig2x2(t.A(i, j), t.C(i, j), t.C(j, i), t.A(j, i));
      eig.push_back(lo);
      eig.push_back(hi);
    }
  return eig;
}

}  // namespace

double spectral_arc(const std::vector<Complex>& eigenvalues) {
  if (eigenvalues.empty()) return 0.0;
  std::vector<double> angles;
  angles.reserve(eigenvalues.size());
  for (const Complex& z : eigenvalues) {
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  double max_gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t k = 1; k < angles.size(); ++k)
    max_gap = std::max(max_gap, angles[k] - angles[k - 1]);
  return kTwoPi - max_gap;
}

ArcResult arc(const MatrixTriple& t) {
  require_valid(t);
  const std::vector<Complex> eig = block_spectrum(t);
  for (const Complex& z : eig)
    if (std::abs(std::abs(z) - 1.0) > kUnitaryTol)
      throw ValidationError(
          "spectral arc needs a unitary triple (eigenvalue off the circle)");
  ArcResult r;
  r.theta = spectral_arc(eig);
  for (const Complex& z : eig) {
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    r.eigen_angles.push_back(a);
  }
  std::sort(r.eigen_angles.begin(), r.eigen_angles.end());
  return r;
}

namespace {

CopyCount count_from_theta(double theta) {
  CopyCount c;
  if (theta < kArcZero) {
    c.equal_spectrum = true;
    return c;
  }
  // guard against a spurious +1 when pi/theta is integral up to roundoff
  c.k = int(std::ceil(std::numbers::pi / theta - 1e-12));
  if (c.k < 1) c.k = 1;
  return c;
}

void require_unitary_pair(const MatrixTriple& t1, const MatrixTriple& t2) {
  if (t1.dim != t2.dim) throw StructuralError("triple dimensions differ");
  if (!check_unitary(t1).is_unitary || !check_unitary(t2).is_unitary)
    throw ValidationError("discrimination needs unitary triples");
}

}  // namespace

CopyCount k_copies(const MatrixTriple& t1, const MatrixTriple& t2) {
  require_unitary_pair(t1, t2);
  const MatrixTriple rel =
      triple_product(symmetry(t2, SymmetryOp::Adjoint), t1);
  return count_from_theta(arc(rel).theta);
}

CopyCount k_bound(const MatrixTriple& t1, const MatrixTriple& t2) {
  require_unitary_pair(t1, t2);
  const MatrixTriple rel =
      triple_product(symmetry(t2, SymmetryOp::Adjoint), t1);
  const BlockDecomposition bd = blocks(rel);

  CopyCount best;
  best.equal_spectrum = true;
  auto consider = [&best](const std::vector<Complex>& eig) {
    const CopyCount c = count_from_theta(spectral_arc(eig));
    if (c.equal_spectrum) return;  // this block never separates the pair
    if (best.equal_spectrum || c.k < best.k) best = c;
  };

  {
    Eigen::ComplexEigenSolver<Matrix> es(bd.b_block, false);
    consider({es.eigenvalues().data(),
              es.eigenvalues().data() + es.eigenvalues().size()});
  }
  for (const auto& blk : bd.pair_blocks) {
    const auto [lo, hi] = eig2x2(blk(0, 0), blk(0, 1), blk(1, 0), blk(1, 1));
    consider({lo, hi});
  }
  return best;
}

LocalRangeSample local_range_sample(const MatrixTriple& t, int n_samples,
                                    std::uint64_t seed) {
  require_valid(t);
  if (n_samples <= 0) throw StructuralError("need at least one sample");
  const int d = t.dim;
  const Matrix bt = t.B - Matrix(t.B.diagonal().asDiagonal());
  const Matrix ct = t.C - Matrix(t.C.diagonal().asDiagonal());
  const Matrix dense = embed(t);

  LocalRangeSample out;
  out.values.reserve(std::size_t(n_samples));
  out.min_abs = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    Rng rng(derive_seed(seed, std::uint64_t(s)));
    const Vector v = haar_state(d, rng);
    const Vector w = haar_state(d, rng);

    const Vector vv = v.cwiseProduct(v.conjugate());
    const Vector ww = w.cwiseProduct(w.conjugate());
    const Vector vw = v.cwiseProduct(w);
    const Vector vwbar = v.cwiseProduct(w.conjugate());
    const Complex value =
        vv.dot(t.A * ww) + vw.dot(bt * vw) + vwbar.dot(ct * vwbar);

    if (s < 10) {
      // dense cross-check on the leading samples
      Vector prod(d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod(i * d + j) = v(i) * w(j);
      const Complex ref = prod.dot(dense * prod);
      if (std::abs(value - ref) > 1e-10)
        throw ToleranceError(
            "triple-coordinate local range value disagrees with the dense "
            "form");
    }

    out.values.push_back(value);
    if (std::abs(value) < out.min_abs) {
      out.min_abs = std::abs(value);
      out.argmin = s;
      out.best_v = v;
      out.best_w = w;
    }
  }
  return out;
}

}  // namespace ldoi
