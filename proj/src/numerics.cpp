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

#include "ldoi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace ldoi {

double unitarity_defect(const Matrix& m) {
  const Matrix g = m.adjoint() * m;
  return (g - Matrix::Identity(m.cols(), m.cols())).norm();
}

bool is_real(const Matrix& m) {
  return m.imag().cwiseAbs().maxCoeff() <= kEqTol;
}

namespace {

std::vector<double> singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

}  // namespace

int count_above_rank_threshold(const std::vector<double>& singular_values,
                               int scale_dim) {
  if (singular_values.empty()) return 0;
  const double smax =
      *std::max_element(singular_values.begin(), singular_values.end());
  const double thr = double(scale_dim) * smax * 1e-12;
  int r = 0;
  for (double s : singular_values)
    if (s > thr) ++r;
  return r;
}

int numerical_rank(const Matrix& m, int scale_dim) {
  const int scale =
      std::max<int>(scale_dim, int(std::max(m.rows(), m.cols())));
  return count_above_rank_threshold(singular_values(m), scale);
}

int integer_rank(const Eigen::MatrixXi& m) {
  using Wide = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
  Wide a = m.cast<long long>();
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rank = 0;
  long long prev = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    // Bareiss update keeps everything integral
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c)
        a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / prev;
      a(r, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return int(rank);
}

double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  auto lex = [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  };
  std::sort(a.begin(), a.end(), lex);
  std::sort(b.begin(), b.end(), lex);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace ldoi
