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

#include "ldoi/hadamardness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace ldoi {

bool SignMatrix::dephased() const {
  if (rows.empty() || rows[0] != 0u) return false;
  for (int i = 1; i < dim; ++i)
    if (rows[std::size_t(i)] & 1u) return false;
  return true;
}

SignMatrix SignMatrix::from_index(int d, std::uint64_t n) {
  const int w = d - 1;
  const int f = w * w;
  SignMatrix m;
  m.dim = d;
  m.rows.assign(std::size_t(d), 0u);
  for (int i = 1; i < d; ++i) {
    std::uint32_t row = 0;
    for (int j = 1; j < d; ++j) {
      const int k = (i - 1) * w + (j - 1);  // row-major free entry
      if ((n >> (f - 1 - k)) & 1u) row |= 1u << unsigned(j);
    }
    m.rows[std::size_t(i)] = row;
  }
  return m;
}

std::uint64_t SignMatrix::to_index() const {
  const int d = dim;
  const int w = d - 1;
  const int f = w * w;
  std::uint64_t n = 0;
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) {
      const int k = (i - 1) * w + (j - 1);
      if ((rows[std::size_t(i)] >> unsigned(j)) & 1u)
        n |= std::uint64_t(1) << (f - 1 - k);
    }
  return n;
}

Matrix SignMatrix::dense() const {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(entry(i, j), 0.0);
  return m;
}

std::string SignMatrix::to_text() const {
  std::string s;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) s += entry(i, j) > 0 ? '+' : '-';
    s += '\n';
  }
  return s;
}

std::int64_t h_measure(const SignMatrix& c) {
  const int d = c.dim;
  std::int64_t total = std::int64_t(d) * d * d;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const int ip = d - 2 * std::popcount(c.rows[std::size_t(i)] ^
                                           c.rows[std::size_t(j)]);
      total += 2 * std::int64_t(ip) * ip;
    }
  return total;
}

double h_measure(const Matrix& c) {
  if (c.rows() != c.cols()) throw StructuralError("matrix must be square");
  const Matrix gram = c * c.adjoint();
  return gram.squaredNorm();  // Tr[(CC')^2]
}

namespace kernels {

ScanFn select_scan_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &scan_range_avx2;
#endif
  return &scan_range_scalar;
}

const char* scan_kernel_name(ScanFn fn) {
#if defined(__x86_64__) || defined(_M_X64)
  if (fn == &scan_range_avx2) return "avx2";
#endif
  if (fn == &scan_range_scalar) return "scalar";
  return "custom";
}

}  // namespace kernels

SearchResult exhaustive_min(int d, int workers, kernels::ScanFn kernel) {
  if (d < 2 || d > 6)
    throw StructuralError(
        "exhaustive search supports 2 <= d <= 6; the d = " +
        std::to_string(d) + " space has 2^" + std::to_string((d - 1) * (d - 1)) +
        " candidates, beyond desk scale (heuristic search is not included)");
  if (!kernel) kernel = kernels::select_scan_kernel();
  if (workers <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    workers = hc ? int(hc) : 1;
  }

  const int f = (d - 1) * (d - 1);
  const std::uint64_t total = std::uint64_t(1) << f;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<kernels::ScanResult> partial(
      std::size_t(workers),
      {std::numeric_limits<std::int64_t>::max(), 0, 0});
  {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + std::uint64_t(workers) - 1) /
                                std::uint64_t(workers);
    for (int wi = 0; wi < workers; ++wi) {
      const std::uint64_t lo = std::uint64_t(wi) * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) continue;
      pool.emplace_back([&, wi, lo, hi] { partial[std::size_t(wi)] =
                                              kernel(d, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  kernels::ScanResult best{std::numeric_limits<std::int64_t>::max(), 0, 0};
  for (const auto& p : partial) best = kernels::merge(best, p);

  SearchResult r;
  r.dim = d;
  r.min_value = best.min_value;
  r.argmin_count = best.count;
  r.first_argmin = SignMatrix::from_index(d, best.first_index);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  r.kernel = kernels::scan_kernel_name(kernel);
  return r;
}

bool odd_d_check(int d) {
  if (d != 3 && d != 5)
    throw StructuralError(
        "odd-d check is supported for d in {3, 5}; larger odd sizes exceed "
        "the exhaustive range");
  const auto r = exhaustive_min(d);
  return r.min_value == std::int64_t(d) * d * d + std::int64_t(d) * (d - 1);
}

Matrix sylvester_hadamard(int d) {
  if (d < 1 || (d & (d - 1)) != 0)
    throw StructuralError("Sylvester construction needs a power-of-two size");
  Matrix h = Matrix::Ones(1, 1);
  for (int n = 1; n < d; n *= 2) {
    Matrix next(2 * n, 2 * n);
    next.topLeftCorner(n, n) = h;
    next.topRightCorner(n, n) = h;
    next.bottomLeftCorner(n, n) = h;
    next.bottomRightCorner(n, n) = -h;
    h = std::move(next);
  }
  return h;
}

}  // namespace ldoi
