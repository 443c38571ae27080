// Copyright 2026 The namedis Authors
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


// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "namedis/kernels.h"

namespace namedis::kernels::avx2 {
namespace {

std::uint64_t horizontal_sum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

__m256i load4(const std::uint32_t* p) {
  return _mm256_cvtepu32_epi64(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

}  // namespace

Moments moments(std::span<const std::uint32_t> values) {
  __m256i sum = _mm256_setzero_si256();
  __m256i sum_sq = _mm256_setzero_si256();
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = load4(values.data() + i);
    sum = _mm256_add_epi64(sum, x);
    sum_sq = _mm256_add_epi64(sum_sq, _mm256_mul_epu32(x, x));
  }
  Moments m = scalar::moments(values.subspan(i));
  m.count = n;
  m.sum += horizontal_sum(sum);
  m.sum_sq += horizontal_sum(sum_sq);
  return m;
}

EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree) {
  const std::size_t n = std::min(src_degree.size(), dst_degree.size());
  __m256i sum = _mm256_setzero_si256();
  __m256i sum_sq = _mm256_setzero_si256();
  __m256i cross = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i u = load4(src_degree.data() + i);
    const __m256i v = load4(dst_degree.data() + i);
    sum = _mm256_add_epi64(sum, _mm256_add_epi64(u, v));
    sum_sq = _mm256_add_epi64(
        sum_sq, _mm256_add_epi64(_mm256_mul_epu32(u, u), _mm256_mul_epu32(v, v)));
    cross = _mm256_add_epi64(cross, _mm256_slli_epi64(_mm256_mul_epu32(u, v), 1));
  }
  EdgeMoments e = scalar::edge_moments(src_degree.subspan(i, n - i),
                                       dst_degree.subspan(i, n - i));
  e.ordered_pairs = 2 * static_cast<std::uint64_t>(n);
  e.sum += horizontal_sum(sum);
  e.sum_sq += horizontal_sum(sum_sq);
  e.cross += horizontal_sum(cross);
  return e;
}

}  // namespace namedis::kernels::avx2
