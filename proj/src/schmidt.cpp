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

#include "ldoi/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/SVD>

#include "ldoi/embed.hpp"
#include "ldoi/numerics.hpp"
#include "ldoi/rng.hpp"
#include "ldoi/triple.hpp"
#include "ldoi/unitary.hpp"

namespace ldoi {

int schmidt_rank(const MatrixTriple& t) {
  require_valid(t);
  const int d = t.dim;
  // singular values of the realigned operator are those of A together with
  // those of the [[B_ij, C_ij], [C_ji, B_ji]] pair blocks
  std::vector<double> sv;
  {
    Eigen::BDCSVD<Matrix> svd(t.A);
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
      sv.push_back(svd.singularValues()(k));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Eigen::Matrix2cd blk;
      blk << t.B(i, j), t.C(i, j), t.C(j, i), t.B(j, i);
      Eigen::JacobiSVD<Eigen::Matrix2cd> svd(blk);
      sv.push_back(svd.singularValues()(0));
      sv.push_back(svd.singularValues()(1));
    }
  return count_above_rank_threshold(sv, d * d);
}

SchmidtSpectrum schmidt_coefficients(const MatrixTriple& t) {
  require_valid(t);
  const int d = t.dim;
  const Matrix r = dense_realign(embed(t));
  Eigen::BDCSVD<Matrix> svd(r);
  std::vector<double> all(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  SchmidtSpectrum spec;
  spec.rank = count_above_rank_threshold(all, d * d);
  spec.coefficients.assign(all.begin(), all.begin() + spec.rank);
  return spec;
}

namespace {

Matrix from_rows(int d, std::initializer_list<double> vals) {
  Matrix m(d, d);
  auto it = vals.begin();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(*it++, 0.0);
  return m;
}

MatrixTriple diag_b_triple(const Matrix& a, const Matrix& c) {
  MatrixTriple t;
  t.dim = int(a.rows());
  t.A = a;
  t.B = a.diagonal().asDiagonal();
  t.C = c;
  return t;
}

}  // namespace

std::vector<std::pair<int, MatrixTriple>> rank_catalog(int d) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<std::pair<int, MatrixTriple>> out;
  if (d == 3) {
    {
      MatrixTriple t;
      t.dim = 3;
      t.A = from_rows(3, {s, s, -1, s, s, 1, 1, -1, 1});
      t.B = from_rows(3, {s, -s, 0, s, s, 0, 0, 0, 1});
      t.C = t.B;
      out.emplace_back(4, t);
    }
    out.emplace_back(
        5, diag_b_triple(from_rows(3, {1, 0, 1, 0, 1, 1, 1, 1, 1}),
                         from_rows(3, {1, 1, 0, 1, 1, 0, 0, 0, 1})));
    out.emplace_back(
        6, diag_b_triple(from_rows(3, {1, 0, 0, 0, 1, 1, 0, 1, 1}),
                         from_rows(3, {1, 1, 1, 1, 1, 0, 1, 0, 1})));
    out.emplace_back(
        7, diag_b_triple(from_rows(3, {1, 0, 0, 0, 1, 1, 0, 1, -1}),
                         from_rows(3, {1, 1, 1, 1, 1, 0, 1, 0, -1})));
  } else if (d == 4) {
    out.emplace_back(5, diag_b_triple(from_rows(4, {-1, 0, 1, 1,   //
                                                    0, -1, 1, 1,   //
                                                    1, 1, -1, -1,  //
                                                    1, 1, 1, 1}),
                                      from_rows(4, {-1, 1, 0, 0,   //
                                                    1, -1, 0, 0,   //
                                                    0, 0, -1, 0,   //
                                                    0, 0, 0, 1})));
    out.emplace_back(6, diag_b_triple(from_rows(4, {-1, 0, 1, 1,   //
                                                    0, -1, 1, 1,   //
                                                    1, 1, -1, 1,   //
                                                    1, 1, 1, -1}),
                                      from_rows(4, {-1, 1, 0, 0,   //
                                                    1, -1, 0, 0,   //
                                                    0, 0, -1, 0,   //
                                                    0, 0, 0, -1})));
    out.emplace_back(7, diag_b_triple(from_rows(4, {-1, 0, 0, 1,   //
                                                    0, -1, -1, 1,  //
                                                    0, 1, 1, 1,    //
                                                    1, 1, 1, -1}),
                                      from_rows(4, {-1, 1, 1, 0,   //
                                                    1, -1, 0, 0,   //
                                                    1, 0, 1, 0,    //
                                                    0, 0, 0, -1})));
    out.emplace_back(8, diag_b_triple(from_rows(4, {-1, 0, 0, 1,   //
                                                    0, -1, 1, 1,   //
                                                    0, 1, -1, 1,   //
                                                    1, 1, 1, -1}),
                                      from_rows(4, {-1, 1, 1, 0,   //
                                                    1, -1, 0, 0,   //
                                                    1, 0, -1, 0,   //
                                                    0, 0, 0, -1})));
    out.emplace_back(9, diag_b_triple(from_rows(4, {-1, 0, 0, 0,   //
                                                    0, -1, 1, 1,   //
                                                    0, 1, -1, -1,  //
                                                    0, 1, 1, 1}),
                                      from_rows(4, {-1, 1, 1, 1,   //
                                                    1, -1, 0, 0,   //
                                                    1, 0, -1, 0,   //
                                                    1, 0, 0, 1})));
    out.emplace_back(10, diag_b_triple(from_rows(4, {-1, 0, 0, 0,   //
                                                     0, -1, 1, 1,   //
                                                     0, 1, -1, 1,   //
                                                     0, 1, 1, -1}),
                                       from_rows(4, {-1, 1, 1, 1,   //
                                                     1, -1, 0, 0,   //
                                                     1, 0, -1, 0,   //
                                                     1, 0, 0, -1})));
    {
      MatrixTriple t;
      t.dim = 4;
      t.A = from_rows(4, {s, s, 0, 0,  //
                          s, s, 0, 1,  //
                          0, 0, 1, 1,  //
                          0, 1, 1, 1});
      t.B = from_rows(4, {s, -s, 0, 0,  //
                          s, s, 0, 0,   //
                          0, 0, 1, 0,   //
                          0, 0, 0, 1});
      t.C = from_rows(4, {s, -s, 1, 1,  //
                          s, s, 1, 0,   //
                          1, 1, 1, 0,   //
                          1, 0, 0, 1});
      out.emplace_back(11, t);
    }
  } else if (d == 5) {
    out.emplace_back(6,
                     diag_b_triple(from_rows(5, {-1, 0, 1, 1, 1,   //
                                                 0, -1, 1, 1, 1,   //
                                                 1, 1, -1, 1, 1,   //
                                                 1, 1, 1, -1, -1,  //
                                                 1, 1, 1, 1, 1}),
                                   from_rows(5, {-1, 1, 0, 0, 0,   //
                                                 1, -1, 0, 0, 0,   //
                                                 0, 0, -1, 0, 0,   //
                                                 0, 0, 0, -1, 0,   //
                                                 0, 0, 0, 0, 1})));
    out.emplace_back(7,
                     diag_b_triple(from_rows(5, {-1, 0, 1, 1, 1,  //
                                                 0, -1, 1, 1, 1,  //
                                                 1, 1, -1, 1, 1,  //
                                                 1, 1, 1, -1, 1,  //
                                                 1, 1, 1, 1, -1}),
                                   from_rows(5, {-1, 1, 0, 0, 0,   //
                                                 1, -1, 0, 0, 0,   //
                                                 0, 0, -1, 0, 0,   //
                                                 0, 0, 0, -1, 0,   //
                                                 0, 0, 0, 0, -1})));
    out.emplace_back(8,
                     diag_b_triple(from_rows(5, {-1, 0, 0, 1, 1,   //
                                                 0, -1, 1, 1, 1,   //
                                                 0, 1, -1, 1, 1,   //
                                                 1, 1, 1, -1, -1,  //
                                                 1, 1, 1, 1, 1}),
                                   from_rows(5, {-1, 1, 1, 0, 0,   //
                                                 1, -1, 0, 0, 0,   //
                                                 1, 0, -1, 0, 0,   //
                                                 0, 0, 0, -1, 0,   //
                                                 0, 0, 0, 0, 1})));
  }
  return out;
}

Matrix orthogonal_with_zero_diagonal(int d, int zeros, std::uint64_t seed) {
  if (zeros < 0 || zeros > d)
    throw StructuralError("zero count out of range");
  if (d == 3 && zeros >= 2)
    throw StructuralError(
        "no 3x3 orthogonal matrix has 2 or 3 zero diagonal entries and a "
        "dense off-diagonal part");
  const int pairs = d * (d - 1) / 2;
  const double magnitude_floor = 0.02;

  for (int attempt = 0; attempt < 400; ++attempt) {
    Rng rng(derive_seed(seed, 0xd1a9 + attempt));
    Eigen::MatrixXd b = haar_orthogonal(d, rng).real();

    bool converged = zeros == 0;
    for (int iter = 0; iter < 80 && !converged; ++iter) {
      Eigen::VectorXd g(zeros);
      for (int i = 0; i < zeros; ++i) g(i) = b(i, i);
      if (g.cwiseAbs().maxCoeff() < 1e-14) {
        converged = true;
        break;
      }
      // linearization: (B S)_ii = sum_k B_ik S_ki for skew S
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(zeros, pairs);
      int col = 0;
      for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l, ++col) {
          if (l < zeros) jac(l, col) += b(l, k);
          if (k < zeros) jac(k, col) -= b(k, l);
        }
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
      const Eigen::VectorXd s = cod.solve(-g);
      Eigen::MatrixXd skew = Eigen::MatrixXd::Zero(d, d);
      col = 0;
      for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l, ++col) {
          skew(k, l) = s(col);
          skew(l, k) = -s(col);
        }
      // Cayley step stays exactly on the orthogonal group
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
      b = b * (eye + 0.5 * skew) * (eye - 0.5 * skew).inverse();
    }
    if (!converged) continue;

    bool pattern_ok = true;
    for (int i = 0; i < d && pattern_ok; ++i)
      for (int j = 0; j < d && pattern_ok; ++j) {
        if (i == j && i < zeros) continue;
        if (std::abs(b(i, j)) < magnitude_floor) pattern_ok = false;
      }
    if (!pattern_ok) continue;

    for (int i = 0; i < zeros; ++i) b(i, i) = 0.0;
    return b.cast<Complex>();
  }
  throw ToleranceError("orthogonal completion did not converge for d = " +
                       std::to_string(d) + ", zeros = " +
                       std::to_string(zeros));
}

namespace {

MatrixTriple make_rank_low(int d, int target) {
  // sign matrix from the first `target` columns of J - 2*1, the last one
  // duplicated across the remaining columns
  Matrix a(d, d);
  for (int j = 0; j < d; ++j) {
    const int src = std::min(j, target - 1);
    for (int i = 0; i < d; ++i) a(i, j) = Complex(i == src ? -1.0 : 1.0, 0.0);
  }
  MatrixTriple t = diag_b_triple(a, Matrix(a.diagonal().asDiagonal()));
  return t;
}

MatrixTriple make_rank_high(int d, int target, std::uint64_t seed) {
  const int zeros = d * d - target;
  const Matrix b = orthogonal_with_zero_diagonal(d, zeros, seed);
  MatrixTriple t;
  t.dim = d;
  t.B = b;
  t.A = b.diagonal().asDiagonal();
  t.C = Matrix::Ones(d, d);
  t.C.diagonal() = b.diagonal();
  return t;
}

// Middle band: B = diag(A), A a {0,+-1} matrix whose off-diagonal zero
// support is a set of p symmetric pairs, C = +-1 exactly on those pairs.
// Then the rank is rank(A) + 2p, so the target splits as r + 2p with
// r in {d-1, d}.
struct MiddlePlan {
  int rank_a = 0;
  std::vector<std::pair<int, int>> zero_pairs;
  bool duplicate_last_rows = false;  // forces rank d-1
};

MiddlePlan middle_plan(int d, int target) {
  MiddlePlan plan;
  const int parity_matched_rank = ((target - d) % 2 == 0) ? d : d - 1;
  plan.rank_a = parity_matched_rank;
  const int p = (target - plan.rank_a) / 2;
  if (plan.rank_a == d) {
    // any symmetric support admits a full-rank sign completion
    int left = p;
    for (int i = 0; i < d && left > 0; ++i)
      for (int j = i + 1; j < d && left > 0; ++j) {
        plan.zero_pairs.emplace_back(i, j);
        --left;
      }
  } else {
    // rank d-1 by duplicating the last two rows; keep their supports equal
    // by zeroing pairs away from them, or mirrored towards both
    plan.duplicate_last_rows = true;
    const int u = d - 2;
    const int inner_cap = (d - 2) * (d - 3) / 2;
    int mirrored = 0;
    int inner = p;
    if (inner > inner_cap) {
      mirrored = (p - inner_cap + 1) / 2;
      inner = p - 2 * mirrored;
    }
    if (inner < 0 || inner > inner_cap || mirrored > d - 2)
      throw StructuralError("middle-band split infeasible");
    int left = inner;
    for (int i = 0; i < u && left > 0; ++i)
      for (int j = i + 1; j < u && left > 0; ++j) {
        plan.zero_pairs.emplace_back(i, j);
        --left;
      }
    for (int k = 0; k < mirrored; ++k) {
      plan.zero_pairs.emplace_back(k, u);
      plan.zero_pairs.emplace_back(k, u + 1);
    }
  }
  return plan;
}

MatrixTriple make_rank_middle(int d, int target, std::uint64_t seed) {
  const MiddlePlan plan = middle_plan(d, target);
  Eigen::MatrixXi support = Eigen::MatrixXi::Ones(d, d);
  for (const auto& [i, j] : plan.zero_pairs) {
    support(i, j) = 0;
    support(j, i) = 0;
  }
  const std::uint64_t base =
      derive_seed(seed, (std::uint64_t(d) << 32) | std::uint64_t(target));
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Rng rng(derive_seed(base, attempt));
    Eigen::MatrixXi a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        a(i, j) = support(i, j) ? rng.sign() : 0;
    if (plan.duplicate_last_rows) a.row(d - 1) = a.row(d - 2);
    if (integer_rank(a) != plan.rank_a) continue;

    Matrix c = Matrix::Zero(d, d);
    for (const auto& [i, j] : plan.zero_pairs) {
      c(i, j) = Complex(1.0, 0.0);
      c(j, i) = Complex(1.0, 0.0);
    }
    Matrix am = a.cast<double>().cast<Complex>();
    c.diagonal() = am.diagonal();
    return diag_b_triple(am, c);
  }
  throw ToleranceError("middle-band sign search exhausted for d = " +
                       std::to_string(d) + ", target = " +
                       std::to_string(target));
}

}  // namespace

MatrixTriple make_rank(int d, int target, std::uint64_t seed) {
  if (d < 3)
    throw StructuralError(
        "rank constructions need d >= 3 (at d = 2 rank 3 is unattainable)");
  if (target < 1 || target > d * d)
    throw StructuralError("target rank must lie in 1..d^2");

  MatrixTriple t;
  bool built = false;
  for (const auto& [rank, cat] : rank_catalog(d))
    if (rank == target) {
      t = cat;
      built = true;
      break;
    }
  if (!built) {
    if (target <= d)
      t = make_rank_low(d, target);
    else if (target >= d * d - d)
      t = make_rank_high(d, target, seed);
    else
      t = make_rank_middle(d, target, seed);
  }

  // every construction is re-verified before leaving
  if (!check_unitary(t, Field::Real).is_unitary)
    throw ToleranceError("rank construction is not orthogonal");
  if (schmidt_rank(t) != target ||
      schmidt_coefficients(t).rank != target)
    throw ToleranceError("rank construction missed its target rank");
  return t;
}

}  // namespace ldoi
