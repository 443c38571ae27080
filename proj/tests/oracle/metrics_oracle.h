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


// Clustering metrics computed from explicit member sets, and a plain
// Levenshtein table.

#ifndef NAMEDIS_TESTS_ORACLE_METRICS_ORACLE_H_
#define NAMEDIS_TESTS_ORACLE_METRICS_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace namedis::oracle {

using Partition = std::vector<std::set<int>>;

// Partition from a label per element.
inline Partition partition_of(const std::vector<int>& labels) {
  std::vector<std::set<int>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (static_cast<std::size_t>(labels[i]) >= by_label.size()) by_label.resize(labels[i] + 1);
    by_label[labels[i]].insert(static_cast<int>(i));
  }
  Partition out;
  for (auto& s : by_label) if (!s.empty()) out.push_back(s);
  return out;
}

inline std::size_t intersection(const std::set<int>& a, const std::set<int>& b) {
  std::size_t n = 0;
  for (int x : a) n += b.count(x);
  return n;
}

struct Metrics {
  double acp, aap, k, cp, cr, cf1, m_rate;
};

inline Metrics metrics(const Partition& pred, const Partition& ref) {
  double n = 0;
  for (const auto& r : ref) n += static_cast<double>(r.size());
  double acp = 0, aap = 0;
  for (const auto& p : pred)
    for (const auto& r : ref) {
      const double x = static_cast<double>(intersection(p, r));
      acp += x * x / static_cast<double>(p.size());
      aap += x * x / static_cast<double>(r.size());
    }
  Metrics m{};
  m.acp = acp / n;
  m.aap = aap / n;
  m.k = std::sqrt(m.acp * m.aap);
  std::size_t correct = 0;
  for (const auto& p : pred) correct += std::count(ref.begin(), ref.end(), p);
  m.cp = static_cast<double>(correct) / static_cast<double>(pred.size());
  m.cr = static_cast<double>(correct) / static_cast<double>(ref.size());
  m.cf1 = m.cp + m.cr > 0 ? 2 * m.cp * m.cr / (m.cp + m.cr) : 0.0;
  std::size_t bad = 0;
  for (const auto& r : ref) {
    std::size_t touched = 0;
    bool merged = false;
    for (const auto& p : pred) {
      if (intersection(p, r) == 0) continue;
      ++touched;
      if (!std::includes(r.begin(), r.end(), p.begin(), p.end())) merged = true;
    }
    bad += touched >= 2 || merged;
  }
  m.m_rate = static_cast<double>(bad) / static_cast<double>(ref.size());
  return m;
}

inline std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

}  // namespace namedis::oracle

#endif  // NAMEDIS_TESTS_ORACLE_METRICS_ORACLE_H_
