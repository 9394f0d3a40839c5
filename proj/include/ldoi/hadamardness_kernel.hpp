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

#pragma once

#include <cstdint>

namespace ldoi::kernels {

// Candidate encoding shared by all kernels. A dephased d x d sign matrix
// has f = (d-1)^2 free entries (rows 1..d-1, columns 1..d-1, row-major);
// free entry k corresponds to bit (f-1-k) of the candidate index, with a
// set bit meaning -1. Indices therefore enumerate matrices in lexicographic
// order with +1 sorting before -1.
struct ScanResult {
  std::int64_t min_value;
  std::uint64_t count;        // candidates attaining min_value
  std::uint64_t first_index;  // smallest such candidate index
};

ScanResult merge(const ScanResult& a, const ScanResult& b);

/// h(C) = Tr[(CC')^2] over candidates in [begin, end); integer popcount
/// arithmetic, exact.
ScanResult scan_range_scalar(int d, std::uint64_t begin, std::uint64_t end);

#if defined(__x86_64__) || defined(_M_X64)
/// Eight candidates per step (AVX2, nibble-LUT popcount). Bit-identical to
/// the scalar kernel. Only call when avx2_available().
ScanResult scan_range_avx2(int d, std::uint64_t begin, std::uint64_t end);
bool avx2_available();
#endif

using ScanFn = ScanResult (*)(int, std::uint64_t, std::uint64_t);

/// Widest kernel supported by the running CPU.
ScanFn select_scan_kernel();
const char* scan_kernel_name(ScanFn fn);

}  // namespace ldoi::kernels
