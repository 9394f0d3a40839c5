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

#include <bit>
#include <cstdint>
#include <limits>

#include "ldoi/hadamardness_kernel.hpp"

namespace ldoi::kernels {

ScanResult merge(const ScanResult& a, const ScanResult& b) {
  if (a.min_value < b.min_value) return a;
  if (b.min_value < a.min_value) return b;
  return {a.min_value, a.count + b.count,
          a.first_index < b.first_index ? a.first_index : b.first_index};
}

// Reference kernel. Row i of the candidate occupies bits
// [f - i*(d-1), f - (i-1)*(d-1)) of the index, highest-significance entry
// first; row 0 is implicitly all +1 (mask 0). The inner product of two rows
// is d - 2*popcount(mask_i XOR mask_j) and
// h = d^3 + 2 * sum_{i<j} ip(i,j)^2.
ScanResult scan_range_scalar(int d, std::uint64_t begin, std::uint64_t end) {
  const int w = d - 1;
  const int f = w * w;
  const std::uint32_t colmask = (1u << w) - 1u;
  ScanResult res{std::numeric_limits<std::int64_t>::max(), 0, 0};
  const std::int64_t base = std::int64_t(d) * d * d;
  std::uint32_t rows[8] = {0};
  for (std::uint64_t n = begin; n < end; ++n) {
    for (int i = 1; i < d; ++i)
      rows[i] = std::uint32_t(n >> (f - i * w)) & colmask;
    std::int64_t s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const int ip = d - 2 * std::popcount(rows[i] ^ rows[j]);
        s += std::int64_t(ip) * ip;
      }
    const std::int64_t h = base + 2 * s;
    if (h < res.min_value) {
      res.min_value = h;
      res.count = 1;
      res.first_index = n;
    } else if (h == res.min_value) {
      ++res.count;
    }
  }
  return res;
}

}  // namespace ldoi::kernels
