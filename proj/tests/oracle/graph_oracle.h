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


// Brute-force graph statistics over a dense adjacency matrix. Written
// independently of the library so tests can compare against it.

#ifndef NAMEDIS_TESTS_ORACLE_GRAPH_ORACLE_H_
#define NAMEDIS_TESTS_ORACLE_GRAPH_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace namedis::oracle {

class DenseGraph {
 public:
  explicit DenseGraph(std::size_t n) : n_(n), adj_(n * n, false) {}

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = true;
  }
  bool edge(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
  std::size_t size() const { return n_; }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) e += edge(u, v);
    return e;
  }
  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += edge(u, v);
    return d;
  }

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

inline std::optional<double> density(const DenseGraph& g) {
  const double n = static_cast<double>(g.size());
  if (g.size() < 2) return std::nullopt;
  return static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
}

// Floyd-Warshall distances; -1 for unreachable.
inline std::vector<std::vector<long>> distances(const DenseGraph& g) {
  const std::size_t n = g.size();
  const long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) if (g.edge(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d) for (auto& x : row) if (x >= inf) x = -1;
  return d;
}

// (component count, largest component / node count)
inline std::pair<std::size_t, double> components(const DenseGraph& g) {
  const auto d = distances(g);
  const std::size_t n = g.size();
  std::vector<bool> assigned(n, false);
  std::size_t count = 0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    ++count;
    std::size_t size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= 0) {
        assigned[j] = true;
        ++size;
      }
    }
    largest = std::max(largest, size);
  }
  return {count, n == 0 ? 0.0 : static_cast<double>(largest) / static_cast<double>(n)};
}

inline std::optional<double> avg_shortest_path(const DenseGraph& g) {
  const auto d = distances(g);
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (d[i][j] > 0) {
        total += static_cast<double>(d[i][j]);
        ++pairs;
      }
  if (pairs == 0) return std::nullopt;
  return total / static_cast<double>(pairs);
}

// Enumerates node triples directly: closed triples over paths of length two.
inline std::optional<double> transitivity(const DenseGraph& g) {
  std::size_t connected = 0;  // paths a-c-b with centre c, a < b
  std::size_t closed = 0;
  for (std::size_t c = 0; c < g.size(); ++c)
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b)
        if (a != c && b != c && g.edge(a, c) && g.edge(b, c)) {
          ++connected;
          closed += g.edge(a, b);
        }
  if (connected == 0) return std::nullopt;
  return static_cast<double>(closed) / static_cast<double>(connected);
}

// Textbook Pearson correlation over both orientations of every edge.
inline std::optional<double> assortativity(const DenseGraph& g) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.edge(u, v)) {
        x.push_back(static_cast<double>(g.degree(u)));
        y.push_back(static_cast<double>(g.degree(v)));
      }
  if (x.empty()) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx < 1e-12 || syy < 1e-12) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace namedis::oracle

#endif  // NAMEDIS_TESTS_ORACLE_GRAPH_ORACLE_H_
