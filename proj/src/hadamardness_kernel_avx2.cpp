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

// AVX2 variant of the candidate scan: eight 32-bit candidate indices per
// step, nibble-LUT popcount. Must stay bit-identical to the scalar kernel;
// the equivalence suite compares them on full enumerations and random
// ranges.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "ldoi/hadamardness_kernel.hpp"

namespace ldoi::kernels {

namespace {

// popcount of 32-bit lanes holding values below 64 (two nibbles)
inline __m256i popcount6(__m256i x) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                       1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nib = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(x, nib));
  const __m256i hi = _mm256_shuffle_epi8(
      lut, _mm256_and_si256(_mm256_srli_epi32(x, 4), nib));
  return _mm256_add_epi8(lo, hi);  // upper lane bytes stay zero
}

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

ScanResult scan_range_avx2(int d, std::uint64_t begin, std::uint64_t end) {
  const int w = d - 1;
  const int f = w * w;  // at most 25 bits for d <= 6, so indices fit int32
  const std::int64_t base = std::int64_t(d) * d * d;
  ScanResult res{std::numeric_limits<std::int64_t>::max(), 0, 0};

  const __m256i colmask = _mm256_set1_epi32((1 << w) - 1);
  const __m256i lane_step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i dvec = _mm256_set1_epi32(d);

  std::uint64_t n = begin;
  alignas(32) std::int32_t hbuf[8];
  for (; n + 8 <= end; n += 8) {
    const __m256i idx =
        _mm256_add_epi32(_mm256_set1_epi32(std::int32_t(n)), lane_step);
    __m256i rows[8];
    rows[0] = _mm256_setzero_si256();
    // per-row shift amounts are uniform across lanes
    for (int i = 1; i < d; ++i)
      rows[i] = _mm256_and_si256(
          _mm256_srl_epi32(idx, _mm_cvtsi32_si128(f - i * w)), colmask);

    __m256i acc = _mm256_setzero_si256();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const __m256i x = _mm256_xor_si256(rows[i], rows[j]);
        const __m256i pc = popcount6(x);
        const __m256i ip = _mm256_sub_epi32(dvec, _mm256_slli_epi32(pc, 1));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(ip, ip));
      }
    const __m256i h = _mm256_add_epi32(
        _mm256_set1_epi32(std::int32_t(base)), _mm256_slli_epi32(acc, 1));

    // skip the scalar tail unless some lane ties or improves the minimum
    const std::int32_t cur =
        std::int32_t(res.min_value > std::int64_t(INT32_MAX)
                         ? INT32_MAX
                         : res.min_value);
    const __m256i curv = _mm256_set1_epi32(cur);
    const __m256i le = _mm256_or_si256(_mm256_cmpgt_epi32(curv, h),
                                       _mm256_cmpeq_epi32(curv, h));
    if (_mm256_testz_si256(le, le)) continue;

    _mm256_store_si256(reinterpret_cast<__m256i*>(hbuf), h);
    for (int lane = 0; lane < 8; ++lane) {
      const std::int64_t hv = hbuf[lane];
      if (hv < res.min_value) {
        res.min_value = hv;
        res.count = 1;
        res.first_index = n + std::uint64_t(lane);
      } else if (hv == res.min_value) {
        ++res.count;
      }
    }
  }
  if (n < end) res = merge(res, scan_range_scalar(d, n, end));
  return res;
}

}  // namespace ldoi::kernels

#endif  // x86_64
