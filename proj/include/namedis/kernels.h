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

// Integer reduction kernels behind the degree and productivity statistics.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The public entry points dispatch once per process on CPU support.
// All arithmetic is unsigned 64-bit, so the variants agree bit for bit.
// Inputs must stay below 2^31 per element and the sums below 2^64.

#ifndef NAMEDIS_KERNELS_H_
#define NAMEDIS_KERNELS_H_

#include <cstdint>
#include <span>
#include <string_view>

namespace namedis::kernels {

struct Moments {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  bool operator==(const Moments&) const = default;
};

// Endpoint-degree sums over undirected edges, each edge taken in both
// orientations: sum = Σ(du + dv), sum_sq = Σ(du² + dv²), cross = Σ 2·du·dv.
struct EdgeMoments {
  std::uint64_t ordered_pairs = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t cross = 0;

  bool operator==(const EdgeMoments&) const = default;
};

enum class Backend { kScalar, kAvx2 };

std::string_view to_string(Backend backend);

// Backend chosen for this process. NAMEDIS_FORCE_SCALAR=1 in the
// environment pins the scalar path.
Backend active_backend();
bool avx2_supported();

Moments moments(std::span<const std::uint32_t> values);
EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree);

namespace scalar {
Moments moments(std::span<const std::uint32_t> values);
EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NAMEDIS_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Callers must check avx2_supported() first.
Moments moments(std::span<const std::uint32_t> values);
EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree);
}  // namespace avx2
#endif

}  // namespace namedis::kernels

#endif  // NAMEDIS_KERNELS_H_
