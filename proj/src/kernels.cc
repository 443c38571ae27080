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


#include "namedis/kernels.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace namedis::kernels {
namespace scalar {

Moments moments(std::span<const std::uint32_t> values) {
  Moments m;
  m.count = values.size();
  for (const std::uint32_t v : values) {
    const std::uint64_t x = v;
    m.sum += x;
    m.sum_sq += x * x;
  }
  return m;
}

EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree) {
  EdgeMoments e;
  const std::size_t n = std::min(src_degree.size(), dst_degree.size());
  e.ordered_pairs = 2 * static_cast<std::uint64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t u = src_degree[i];
    const std::uint64_t v = dst_degree[i];
    e.sum += u + v;
    e.sum_sq += u * u + v * v;
    e.cross += 2 * u * v;
  }
  return e;
}

}  // namespace scalar

std::string_view to_string(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

bool avx2_supported() {
#if defined(NAMEDIS_HAVE_AVX2_KERNELS)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

// NAMEDIS_FORCE_SCALAR=1 pins the portable path.
Backend active_backend() {
  static const Backend backend = [] {
    const char* force = std::getenv("NAMEDIS_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "1") == 0) return Backend::kScalar;
    return avx2_supported() ? Backend::kAvx2 : Backend::kScalar;
  }();
  return backend;
}

Moments moments(std::span<const std::uint32_t> values) {
#if defined(NAMEDIS_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::kAvx2) return avx2::moments(values);
#endif
  return scalar::moments(values);
}

EdgeMoments edge_moments(std::span<const std::uint32_t> src_degree,
                         std::span<const std::uint32_t> dst_degree) {
#if defined(NAMEDIS_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::kAvx2) {
    return avx2::edge_moments(src_degree, dst_degree);
  }
#endif
  return scalar::edge_moments(src_degree, dst_degree);
}

}  // namespace namedis::kernels
