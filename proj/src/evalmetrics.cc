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

#include "namedis/evalmetrics.h"

#include <algorithm>
#include <cmath>

#include "namedis/errors.h"

namespace namedis {
namespace {

std::map<std::string_view, std::size_t> index_ids(
    const Clustering::Assignment& assignment) {
  std::map<std::string_view, std::size_t> index;
  for (const auto& [m, c] : assignment) index.emplace(c, 0);
  std::size_t next = 0;
  for (auto& [c, i] : index) i = next++;
  return index;
}

double share(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0
                    : static_cast<double>(part) / static_cast<double>(whole);
}

// Sum of num[i] / den[i], added in sorted order so the result does not
// depend on how clusters are labeled. Extended precision keeps small
// rational results correctly rounded.
long double ordered_sum(const std::vector<std::size_t>& num,
                        const std::vector<std::size_t>& den) {
  std::vector<long double> terms(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    terms[i] = static_cast<long double>(num[i]) / static_cast<long double>(den[i]);
  }
  std::sort(terms.begin(), terms.end());
  long double sum = 0.0L;
  for (long double x : terms) sum += x;
  return sum;
}

}  // namespace

OverlapTable overlap_table(const Clustering& pred, const Clustering& ref) {
  const auto& p = pred.assignment();
  const auto& r = ref.assignment();
  if (p.size() != r.size()) {
    throw DataError("clusterings cover different mention sets (" +
                    std::to_string(p.size()) + " vs " +
                    std::to_string(r.size()) + " mentions)");
  }
  const auto pred_index = index_ids(p);
  const auto ref_index = index_ids(r);

  OverlapTable t;
  t.total = p.size();
  t.predicted_sizes.assign(pred_index.size(), 0);
  t.reference_sizes.assign(ref_index.size(), 0);
  for (const auto& [id, i] : pred_index) t.predicted_ids.emplace_back(id);
  for (const auto& [id, j] : ref_index) t.reference_ids.emplace_back(id);

  auto pi = p.begin();
  auto ri = r.begin();
  for (; pi != p.end(); ++pi, ++ri) {
    if (pi->first != ri->first) {
      throw DataError("clusterings cover different mention sets: '" +
                      std::min(pi->first, ri->first) + "' is not in both");
    }
    const std::size_t i = pred_index.at(pi->second);
    const std::size_t j = ref_index.at(ri->second);
    ++t.cells[{i, j}];
    ++t.predicted_sizes[i];
    ++t.reference_sizes[j];
  }
  return t;
}

KMetric k_metric(const OverlapTable& t) {
  if (t.total == 0) throw DataError("K-metric needs at least one mention");
  std::vector<std::size_t> pred_sq(t.predicted_count(), 0);
  std::vector<std::size_t> ref_sq(t.reference_count(), 0);
  for (const auto& [cell, n] : t.cells) {
    pred_sq[cell.first] += n * n;
    ref_sq[cell.second] += n * n;
  }
  const long double n = static_cast<long double>(t.total);
  const long double acp = ordered_sum(pred_sq, t.predicted_sizes) / n;
  const long double aap = ordered_sum(ref_sq, t.reference_sizes) / n;
  KMetric k;
  k.acp = static_cast<double>(acp);
  k.aap = static_cast<double>(aap);
  k.k = static_cast<double>(std::sqrt(acp * aap));
  return k;
}

ClusterF1 cluster_f1(const OverlapTable& t) {
  ClusterF1 f;
  // A predicted cluster equals a reference cluster iff their overlap
  // covers both entirely.
  for (const auto& [cell, n] : t.cells) {
    if (n == t.predicted_sizes[cell.first] && n == t.reference_sizes[cell.second]) {
      ++f.correct;
    }
  }
  f.cp = share(f.correct, t.predicted_count());
  f.cr = share(f.correct, t.reference_count());
  f.cf1 = f.cp + f.cr > 0.0 ? 2.0 * f.cp * f.cr / (f.cp + f.cr) : 0.0;
  return f;
}

MisidentificationFlags misidentification_flags(const OverlapTable& t) {
  MisidentificationFlags flags;
  flags.split.assign(t.reference_count(), false);
  flags.merged.assign(t.reference_count(), false);
  std::vector<std::size_t> spread(t.reference_count(), 0);
  for (const auto& [cell, n] : t.cells) {
    const auto [i, j] = cell;
    ++spread[j];
    if (n < t.predicted_sizes[i]) flags.merged[j] = true;
  }
  for (std::size_t j = 0; j < spread.size(); ++j) flags.split[j] = spread[j] >= 2;
  return flags;
}

MRate m_rate(const OverlapTable& t) {
  const auto flags = misidentification_flags(t);
  MRate m;
  for (std::size_t j = 0; j < t.reference_count(); ++j) {
    const bool s = flags.split[j];
    const bool g = flags.merged[j];
    if (s && g) {
      ++m.split_and_merge;
    } else if (s) {
      ++m.split_only;
    } else if (g) {
      ++m.merge_only;
    }
  }
  m.misidentified = m.split_only + m.merge_only + m.split_and_merge;
  m.m_rate = share(m.misidentified, t.reference_count());
  return m;
}

double MRate::split_only_share() const { return share(split_only, misidentified); }
double MRate::merge_only_share() const { return share(merge_only, misidentified); }
double MRate::split_and_merge_share() const {
  return share(split_and_merge, misidentified);
}

EvalReport evaluate(const Clustering& pred, const Clustering& ref) {
  const auto table = overlap_table(pred, ref);
  EvalReport r;
  r.k = k_metric(table);
  r.f1 = cluster_f1(table);
  r.m = m_rate(table);
  r.mentions = table.total;
  r.predicted_clusters = table.predicted_count();
  r.reference_clusters = table.reference_count();
  return r;
}

nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["acp"] = r.k.acp;
  j["aap"] = r.k.aap;
  j["k"] = r.k.k;
  j["cp"] = r.f1.cp;
  j["cr"] = r.f1.cr;
  j["cf1"] = r.f1.cf1;
  j["m_rate"] = r.m.m_rate;
  j["breakdown"] = {{"split_only", r.m.split_only_share()},
                    {"merge_only", r.m.merge_only_share()},
                    {"split_and_merge", r.m.split_and_merge_share()}};
  j["mentions"] = r.mentions;
  j["predicted_clusters"] = r.predicted_clusters;
  j["reference_clusters"] = r.reference_clusters;
  j["correct_clusters"] = r.f1.correct;
  j["misidentified_clusters"] = r.m.misidentified;
  return j;
}

}  // namespace namedis
