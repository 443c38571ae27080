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


#include "namedis/netstats.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

#include "namedis/errors.h"
#include "namedis/evalmetrics.h"
#include "namedis/kernels.h"

namespace namedis {
namespace {

std::optional<double> ratio(__int128 num, __int128 den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

nlohmann::ordered_json nullable(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

struct PathTotals {
  std::uint64_t length = 0;
  std::uint64_t pairs = 0;
};

// BFS from every source s, counting targets t > s only.
PathTotals path_totals(const CoauthorGraph& g, NodeId begin, NodeId end) {
  PathTotals totals;
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> dist(n, UINT32_MAX);
  std::vector<NodeId> queue(n);
  std::vector<NodeId> touched;
  for (NodeId s = begin; s < end; ++s) {
    if (g.degree(s) == 0) continue;
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const NodeId u = queue[head++];
      for (const NodeId w : g.neighbors(u)) {
        if (dist[w] != UINT32_MAX) continue;
        dist[w] = dist[u] + 1;
        queue[tail++] = w;
        if (w > s) {
          totals.length += dist[w];
          ++totals.pairs;
        }
      }
    }
    for (std::size_t i = 0; i < tail; ++i) dist[queue[i]] = UINT32_MAX;
  }
  return totals;
}

}  // namespace

CoauthorGraph::CoauthorGraph(std::vector<std::string> node_ids,
                             std::vector<std::pair<NodeId, NodeId>> edges)
    : node_ids_(std::move(node_ids)) {
  const std::size_t n = node_ids_.size();
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw DataError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
  }
}

std::span<const NodeId> CoauthorGraph::neighbors(NodeId v) const {
  return std::span<const NodeId>(adjacency_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::uint32_t CoauthorGraph::degree(NodeId v) const {
  return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::vector<std::uint32_t> CoauthorGraph::degrees() const {
  std::vector<std::uint32_t> out(node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = degree(v);
  return out;
}

CoauthorGraph build_graph(const Corpus& corpus, const Clustering& clustering) {
  const auto labels = clustering.dense_labels(corpus);
  std::set<std::string_view> ids;
  for (const auto& [m, c] : clustering.assignment()) ids.insert(c);
  std::vector<std::string> node_ids(ids.begin(), ids.end());

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t first = 0;
  for (const auto& paper : corpus.papers()) {
    const std::size_t n = paper.authors.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto u = static_cast<NodeId>(labels[first + a]);
        const auto v = static_cast<NodeId>(labels[first + b]);
        if (u != v) edges.emplace_back(u, v);
      }
    }
    first += n;
  }
  return CoauthorGraph(std::move(node_ids), std::move(edges));
}

std::map<std::string, std::uint32_t> productivity(const Corpus& corpus,
                                                  const Clustering& clustering) {
  const auto labels = clustering.dense_labels(corpus);
  std::set<std::string_view> ids;
  for (const auto& [m, c] : clustering.assignment()) ids.insert(c);
  const std::vector<std::string_view> names(ids.begin(), ids.end());

  std::vector<std::uint32_t> counts(names.size(), 0);
  std::vector<std::size_t> last_paper(names.size(), SIZE_MAX);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t paper = corpus.mentions()[i].paper;
    if (last_paper[labels[i]] != paper) {
      last_paper[labels[i]] = paper;
      ++counts[labels[i]];
    }
  }
  std::map<std::string, std::uint32_t> out;
  for (std::size_t c = 0; c < names.size(); ++c) {
    out.emplace(std::string(names[c]), counts[c]);
  }
  return out;
}

std::map<std::string, std::uint32_t> degree_map(const CoauthorGraph& graph) {
  std::map<std::string, std::uint32_t> out;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    out.emplace(graph.node_ids()[v], graph.degree(v));
  }
  return out;
}

ComponentSummary components(const CoauthorGraph& graph) {
  ComponentSummary s;
  const std::size_t n = graph.node_count();
  if (n == 0) return s;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++s.count;
    std::size_t size = 0;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (const NodeId w : graph.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    s.largest_size = std::max(s.largest_size, size);
  }
  s.largest_ratio = static_cast<double>(s.largest_size) / static_cast<double>(n);
  return s;
}

std::optional<double> density(const CoauthorGraph& graph) {
  const __int128 n = graph.node_count();
  return ratio(2 * static_cast<__int128>(graph.edge_count()), n * (n - 1));
}

std::optional<double> avg_shortest_path(const CoauthorGraph& graph) {
  const std::size_t n = graph.node_count();
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n / 64));
  std::vector<PathTotals> partial(workers);
  if (workers == 1) {
    partial[0] = path_totals(graph, 0, static_cast<NodeId>(n));
  } else {
    // Sources are handed out in chunks; integer totals make the reduction
    // independent of scheduling.
    constexpr NodeId kChunk = 32;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (;;) {
          const std::size_t begin = next.fetch_add(kChunk);
          if (begin >= n) break;
          const auto end = static_cast<NodeId>(std::min<std::size_t>(n, begin + kChunk));
          const PathTotals t = path_totals(graph, static_cast<NodeId>(begin), end);
          partial[w].length += t.length;
          partial[w].pairs += t.pairs;
        }
      });
    }
    for (auto& t : threads) t.join();
  }
  PathTotals total;
  for (const auto& p : partial) {
    total.length += p.length;
    total.pairs += p.pairs;
  }
  return ratio(total.length, total.pairs);
}

std::optional<double> transitivity(const CoauthorGraph& graph) {
  std::uint64_t triangles = 0;
  for (const auto& [u, v] : graph.edges()) {
    const auto nu = graph.neighbors(u);
    const auto nv = graph.neighbors(v);
    // Common neighbours w > v, so each triangle u < v < w counts once.
    auto a = std::upper_bound(nu.begin(), nu.end(), v);
    auto b = std::upper_bound(nv.begin(), nv.end(), v);
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++triangles;
        ++a;
        ++b;
      }
    }
  }
  std::uint64_t triples = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const std::uint64_t d = graph.degree(v);
    triples += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return ratio(3 * static_cast<__int128>(triangles), triples);
}

std::optional<double> assortativity(const CoauthorGraph& graph) {
  std::vector<std::uint32_t> du;
  std::vector<std::uint32_t> dv;
  du.reserve(graph.edge_count());
  dv.reserve(graph.edge_count());
  for (const auto& [u, v] : graph.edges()) {
    du.push_back(graph.degree(u));
    dv.push_back(graph.degree(v));
  }
  const auto e = kernels::edge_moments(du, dv);
  const __int128 m = e.ordered_pairs;
  const __int128 s = e.sum;
  const __int128 num = m * static_cast<__int128>(e.cross) - s * s;
  const __int128 den = m * static_cast<__int128>(e.sum_sq) - s * s;
  if (m == 0 || den == 0) return std::nullopt;
  return ratio(num, den);
}

MeanSd mean_sd(std::span<const std::uint32_t> values) {
  MeanSd r;
  if (values.empty()) return r;
  const auto m = kernels::moments(values);
  const __int128 n = m.count;
  const __int128 s = m.sum;
  const __int128 var_num = n * static_cast<__int128>(m.sum_sq) - s * s;
  r.mean = static_cast<double>(static_cast<long double>(s) / static_cast<long double>(n));
  r.sd = static_cast<double>(std::sqrt(static_cast<long double>(var_num)) /
                             static_cast<long double>(n));
  return r;
}

NetworkStats compute_stats(const Corpus& corpus, const Clustering& clustering) {
  if (corpus.mention_count() == 0) throw DataError("corpus has no mentions");
  return compute_stats(corpus, clustering, build_graph(corpus, clustering));
}

NetworkStats compute_stats(const Corpus& corpus, const Clustering& clustering,
                           const CoauthorGraph& graph) {
  if (corpus.mention_count() == 0) throw DataError("corpus has no mentions");
  NetworkStats s;
  s.unique_authors = graph.node_count();
  s.n_edges = graph.edge_count();
  s.density = density(graph);

  std::vector<std::uint32_t> papers;
  for (const auto& [id, count] : productivity(corpus, clustering)) {
    papers.push_back(count);
  }
  s.productivity = mean_sd(papers);
  const auto degrees = graph.degrees();
  s.degree = mean_sd(degrees);

  const auto comps = components(graph);
  s.n_components = comps.count;
  s.largest_component_ratio = comps.largest_ratio;
  s.avg_shortest_path = avg_shortest_path(graph);
  s.transitivity = transitivity(graph);
  s.assortativity = assortativity(graph);
  return s;
}

nlohmann::ordered_json to_json(const NetworkStats& s) {
  nlohmann::ordered_json j;
  j["unique_authors"] = s.unique_authors;
  j["n_edges"] = s.n_edges;
  j["density"] = nullable(s.density);
  j["avg_productivity"] = s.productivity.mean;
  j["sd_productivity"] = s.productivity.sd;
  j["avg_degree"] = s.degree.mean;
  j["sd_degree"] = s.degree.sd;
  j["n_components"] = s.n_components;
  j["largest_component_ratio"] = s.largest_component_ratio;
  j["avg_shortest_path"] = nullable(s.avg_shortest_path);
  j["transitivity"] = nullable(s.transitivity);
  j["assortativity"] = nullable(s.assortativity);
  return j;
}

DistributionCurve cumulative_distribution(std::span<const std::uint32_t> values) {
  if (values.empty()) throw DataError("distribution needs at least one value");
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto v : values) ++counts[v];
  DistributionCurve curve;
  std::size_t at_or_above = values.size();
  for (const auto& [value, count] : counts) {
    curve.push_back({value, count,
                     static_cast<double>(at_or_above) /
                         static_cast<double>(values.size())});
    at_or_above -= count;
  }
  return curve;
}

std::string serialize_curve(const DistributionCurve& curve) {
  std::string out = "value,count,cum_fraction\n";
  char buf[96];
  for (const auto& p : curve) {
    std::snprintf(buf, sizeof buf, "%llu,%zu,%.17g\n",
                  static_cast<unsigned long long>(p.value), p.count,
                  p.cum_fraction);
    out += buf;
  }
  return out;
}

std::map<std::string, std::string> crosswalk(const Clustering& ref,
                                             const Clustering& cmp) {
  const auto table = overlap_table(cmp, ref);
  // Per reference cluster: best (count, compared index). Compared indices
  // follow lexicographic id order, so the first maximum is the smallest id.
  std::vector<std::pair<std::size_t, std::size_t>> best(
      table.reference_count(), {0, 0});
  for (const auto& [cell, n] : table.cells) {
    const auto [i, j] = cell;
    if (n > best[j].first) best[j] = {n, i};
  }
  std::map<std::string, std::string> out;
  for (std::size_t j = 0; j < best.size(); ++j) {
    out.emplace(table.reference_ids[j], table.predicted_ids[best[j].second]);
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, std::uint32_t>> ranked(
    const std::map<std::string, std::uint32_t>& values) {
  std::vector<std::pair<std::string, std::uint32_t>> out(values.begin(),
                                                         values.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

}  // namespace

TopKReport top_k_report(const std::map<std::string, std::uint32_t>& ref_values,
                        const std::map<std::string, std::uint32_t>& cmp_values,
                        const std::map<std::string, std::string>& ref_to_cmp,
                        std::size_t k) {
  if (k == 0) throw DataError("top-k needs k >= 1");
  TopKReport r;
  r.k = k;
  const auto ref_rank = ranked(ref_values);
  const auto cmp_rank = ranked(cmp_values);
  if (ref_rank.empty()) return r;

  r.threshold = ref_rank[std::min(k, ref_rank.size()) - 1].second;
  for (const auto& [id, v] : ref_rank) {
    if (v >= r.threshold) r.authors_at_or_above.push_back(id);
  }
  for (const auto& [id, v] : cmp_rank) {
    if (v >= r.threshold) ++r.compared_at_or_above;
  }

  std::set<std::string_view> cmp_top10;
  for (std::size_t i = 0; i < std::min<std::size_t>(10, cmp_rank.size()); ++i) {
    cmp_top10.insert(cmp_rank[i].first);
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(10, ref_rank.size()); ++i) {
    const auto it = ref_to_cmp.find(ref_rank[i].first);
    if (it != ref_to_cmp.end() && cmp_top10.contains(it->second)) ++r.top10_overlap;
  }
  const auto top1 = ref_to_cmp.find(ref_rank.front().first);
  r.top1_changed = cmp_rank.empty() || top1 == ref_to_cmp.end() ||
                   top1->second != cmp_rank.front().first;
  return r;
}

nlohmann::ordered_json to_json(const TopKReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["threshold"] = r.threshold;
  j["reference_at_or_above"] = r.authors_at_or_above.size();
  j["compared_at_or_above"] = r.compared_at_or_above;
  j["top10_overlap"] = r.top10_overlap;
  j["top1_changed"] = r.top1_changed;
  j["authors_at_or_above"] = r.authors_at_or_above;
  return j;
}

MisattributionShare misattribution_share(const Clustering& ref,
                                         const Clustering& pred,
                                         const Corpus& corpus,
                                         const OriginList& origins) {
  if (origins.empty()) throw DataError("origin list is empty");
  const auto table = overlap_table(pred, ref);
  const auto flags = misidentification_flags(table);

  std::map<std::string_view, std::size_t> ref_index;
  for (std::size_t j = 0; j < table.reference_ids.size(); ++j) {
    ref_index.emplace(table.reference_ids[j], j);
  }
  std::vector<std::map<std::string, std::size_t>> surnames(table.reference_count());
  for (const auto& [mention_id, cluster_id] : ref.assignment()) {
    const auto index = corpus.find_mention(mention_id);
    if (!index) throw DataError("mention '" + mention_id + "' is not in the corpus");
    const auto& m = corpus.mention(*index);
    ++surnames[ref_index.at(cluster_id)][parse_name(m.surname_raw, m.given_raw).joined_surname()];
  }

  MisattributionShare r;
  r.reference_clusters = table.reference_count();
  for (std::size_t j = 0; j < surnames.size(); ++j) {
    // std::map iteration is lexicographic, so the first maximum wins ties.
    const std::string* majority = nullptr;
    std::size_t best = 0;
    for (const auto& [name, count] : surnames[j]) {
      if (count > best) {
        best = count;
        majority = &name;
      }
    }
    const bool listed = majority != nullptr && origins.contains(*majority);
    const bool flagged = flags.misidentified(j);
    r.origin_clusters += listed;
    r.misidentified_clusters += flagged;
    r.misidentified_origin_clusters += listed && flagged;
  }
  auto share = [](std::size_t part, std::size_t whole) {
    return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
  };
  r.population_share = share(r.origin_clusters, r.reference_clusters);
  r.misidentified_share = share(r.misidentified_origin_clusters, r.misidentified_clusters);
  return r;
}

nlohmann::ordered_json to_json(const MisattributionShare& s) {
  nlohmann::ordered_json j;
  j["population_share"] = s.population_share;
  j["misidentified_share"] = s.misidentified_share;
  j["reference_clusters"] = s.reference_clusters;
  j["origin_clusters"] = s.origin_clusters;
  j["misidentified_clusters"] = s.misidentified_clusters;
  j["misidentified_origin_clusters"] = s.misidentified_origin_clusters;
  return j;
}

}  // namespace namedis
