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

// Unweighted coauthorship graphs induced by a clustering, and the network
// statistics compared across disambiguation methods.

#ifndef NAMEDIS_NETSTATS_H_
#define NAMEDIS_NETSTATS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "namedis/corpus.h"
#include "namedis/names.h"

namespace namedis {

using NodeId = std::uint32_t;

class CoauthorGraph {
 public:
  CoauthorGraph() = default;
  // Self-loops are dropped and parallel edges collapsed.
  CoauthorGraph(std::vector<std::string> node_ids,
                std::vector<std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return node_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  // Sorted, u < v.
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const;
  std::uint32_t degree(NodeId v) const;
  std::vector<std::uint32_t> degrees() const;

 private:
  std::vector<std::string> node_ids_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Nodes are the cluster ids of the clustering in lexicographic order; every
// pair of distinct clusters sharing a byline is one edge.
CoauthorGraph build_graph(const Corpus& corpus, const Clustering& clustering);

// Distinct papers per cluster id.
std::map<std::string, std::uint32_t> productivity(const Corpus& corpus,
                                                  const Clustering& clustering);
// Degree per cluster id.
std::map<std::string, std::uint32_t> degree_map(const CoauthorGraph& graph);

struct ComponentSummary {
  std::size_t count = 0;
  std::size_t largest_size = 0;
  double largest_ratio = 0.0;
};

ComponentSummary components(const CoauthorGraph& graph);
std::optional<double> density(const CoauthorGraph& graph);
// Mean geodesic over unordered reachable pairs.
std::optional<double> avg_shortest_path(const CoauthorGraph& graph);
// 3·triangles / connected triples.
std::optional<double> transitivity(const CoauthorGraph& graph);
// Pearson correlation of endpoint degrees over both edge orientations.
std::optional<double> assortativity(const CoauthorGraph& graph);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // population
};

MeanSd mean_sd(std::span<const std::uint32_t> values);

struct NetworkStats {
  std::size_t unique_authors = 0;
  std::size_t n_edges = 0;
  std::optional<double> density;
  MeanSd productivity;
  MeanSd degree;
  std::size_t n_components = 0;
  double largest_component_ratio = 0.0;
  std::optional<double> avg_shortest_path;
  std::optional<double> transitivity;
  std::optional<double> assortativity;
};

// Throws DataError for an empty corpus.
NetworkStats compute_stats(const Corpus& corpus, const Clustering& clustering);
NetworkStats compute_stats(const Corpus& corpus, const Clustering& clustering,
                           const CoauthorGraph& graph);

// Undefined values serialize as null.
nlohmann::ordered_json to_json(const NetworkStats& stats);

struct DistributionPoint {
  std::uint64_t value = 0;
  std::size_t count = 0;
  double cum_fraction = 0.0;  // share of values >= value
};

using DistributionCurve = std::vector<DistributionPoint>;

// Throws DataError for empty input.
DistributionCurve cumulative_distribution(std::span<const std::uint32_t> values);
// CSV "value,count,cum_fraction".
std::string serialize_curve(const DistributionCurve& curve);

// Maps every reference cluster to the compared cluster holding most of its
// mentions; ties go to the lexicographically smallest compared id.
std::map<std::string, std::string> crosswalk(const Clustering& ref,
                                             const Clustering& cmp);

struct TopKReport {
  std::size_t k = 0;
  std::uint32_t threshold = 0;
  std::vector<std::string> authors_at_or_above;  // reference, ranked
  std::size_t compared_at_or_above = 0;
  std::size_t top10_overlap = 0;
  bool top1_changed = false;
};

// Ranks by value descending then id ascending. The threshold is the largest
// value that admits at least k reference authors (all of them when fewer).
TopKReport top_k_report(const std::map<std::string, std::uint32_t>& ref_values,
                        const std::map<std::string, std::uint32_t>& cmp_values,
                        const std::map<std::string, std::string>& ref_to_cmp,
                        std::size_t k);

nlohmann::ordered_json to_json(const TopKReport& report);

struct MisattributionShare {
  double population_share = 0.0;
  double misidentified_share = 0.0;
  std::size_t reference_clusters = 0;
  std::size_t origin_clusters = 0;  // reference clusters on the list
  std::size_t misidentified_clusters = 0;
  std::size_t misidentified_origin_clusters = 0;
};

// Reference clusters are labelled by their most frequent normalized surname
// (ties lexicographic). Throws DataError for an empty origin list.
MisattributionShare misattribution_share(const Clustering& ref,
                                         const Clustering& pred,
                                         const Corpus& corpus,
                                         const OriginList& origins);

nlohmann::ordered_json to_json(const MisattributionShare& share);

}  // namespace namedis

#endif  // NAMEDIS_NETSTATS_H_
