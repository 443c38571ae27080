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

// Quality of a predicted clustering against a reference clustering.

#ifndef NAMEDIS_EVALMETRICS_H_
#define NAMEDIS_EVALMETRICS_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "namedis/corpus.h"
#include "json.hpp"

namespace namedis {

// Contingency counts between predicted clusters (rows) and reference
// clusters (columns). Both index spaces are dense and follow the
// lexicographic order of the cluster ids.
struct OverlapTable {
  std::size_t total = 0;  // N
  std::vector<std::string> predicted_ids;
  std::vector<std::string> reference_ids;
  std::vector<std::size_t> predicted_sizes;  // n_i
  std::vector<std::size_t> reference_sizes;  // n_j
  // Non-zero cells (i, j) -> n_ij.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cells;

  std::size_t predicted_count() const { return predicted_sizes.size(); }
  std::size_t reference_count() const { return reference_sizes.size(); }
};

// Throws DataError when the two clusterings cover different mention sets.
OverlapTable overlap_table(const Clustering& pred, const Clustering& ref);

struct KMetric {
  double acp = 0.0;
  double aap = 0.0;
  double k = 0.0;
};

KMetric k_metric(const OverlapTable& table);

struct ClusterF1 {
  double cp = 0.0;
  double cr = 0.0;
  double cf1 = 0.0;
  std::size_t correct = 0;  // predicted clusters equal to a reference cluster
};

ClusterF1 cluster_f1(const OverlapTable& table);

// Per reference cluster: split across predicted clusters and/or merged with
// foreign mentions.
struct MisidentificationFlags {
  std::vector<bool> split;
  std::vector<bool> merged;

  bool misidentified(std::size_t j) const { return split[j] || merged[j]; }
};

MisidentificationFlags misidentification_flags(const OverlapTable& table);

struct MRate {
  double m_rate = 0.0;
  std::size_t misidentified = 0;
  std::size_t split_only = 0;
  std::size_t merge_only = 0;
  std::size_t split_and_merge = 0;

  // Shares of the misidentified reference clusters; all zero when none.
  double split_only_share() const;
  double merge_only_share() const;
  double split_and_merge_share() const;
};

MRate m_rate(const OverlapTable& table);

struct EvalReport {
  KMetric k;
  ClusterF1 f1;
  MRate m;
  std::size_t mentions = 0;
  std::size_t predicted_clusters = 0;
  std::size_t reference_clusters = 0;
};

EvalReport evaluate(const Clustering& pred, const Clustering& ref);

// {"acp","aap","k","cp","cr","cf1","m_rate","breakdown":{...}, counts}
nlohmann::ordered_json to_json(const EvalReport& report);

}  // namespace namedis

#endif  // NAMEDIS_EVALMETRICS_H_
