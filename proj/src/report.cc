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


#include "namedis/report.h"

#include "namedis/errors.h"
#include "namedis/evalmetrics.h"
#include "namedis/ibd.h"
#include "namedis/netstats.h"

namespace namedis {
namespace {

constexpr std::size_t kTopK[] = {1, 10, 20};

nlohmann::ordered_json nullable(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> count(std::size_t n) { return static_cast<double>(n); }

nlohmann::ordered_json stats_change(const NetworkStats& m, const NetworkStats& t) {
  nlohmann::ordered_json j;
  j["unique_authors"] = nullable(percent_change(count(m.unique_authors), count(t.unique_authors)));
  j["n_edges"] = nullable(percent_change(count(m.n_edges), count(t.n_edges)));
  j["density"] = nullable(percent_change(m.density, t.density));
  j["avg_productivity"] =
      nullable(percent_change(m.productivity.mean, t.productivity.mean));
  j["avg_degree"] = nullable(percent_change(m.degree.mean, t.degree.mean));
  j["n_components"] =
      nullable(percent_change(count(m.n_components), count(t.n_components)));
  j["largest_component_ratio"] = nullable(
      percent_change(m.largest_component_ratio, t.largest_component_ratio));
  j["avg_shortest_path"] =
      nullable(percent_change(m.avg_shortest_path, t.avg_shortest_path));
  j["transitivity"] = nullable(percent_change(m.transitivity, t.transitivity));
  j["assortativity"] = nullable(percent_change(m.assortativity, t.assortativity));
  return j;
}

struct MethodView {
  Clustering clustering;
  NetworkStats stats;
  std::map<std::string, std::uint32_t> productivity;
  std::map<std::string, std::uint32_t> degree;
};

MethodView view_of(const Corpus& corpus, Clustering clustering) {
  MethodView v;
  const auto graph = build_graph(corpus, clustering);
  v.stats = compute_stats(corpus, clustering, graph);
  v.productivity = productivity(corpus, clustering);
  v.degree = degree_map(graph);
  v.clustering = std::move(clustering);
  return v;
}

std::string curve_csv(const std::map<std::string, std::uint32_t>& values) {
  std::vector<std::uint32_t> flat;
  flat.reserve(values.size());
  for (const auto& [id, v] : values) flat.push_back(v);
  return serialize_curve(cumulative_distribution(flat));
}

nlohmann::ordered_json top_k_block(const std::map<std::string, std::uint32_t>& ref,
                                   const std::map<std::string, std::uint32_t>& cmp,
                                   const std::map<std::string, std::string>& walk) {
  nlohmann::ordered_json j;
  for (const std::size_t k : kTopK) {
    j[std::to_string(k)] = to_json(top_k_report(ref, cmp, walk, k));
  }
  return j;
}

}  // namespace

bool is_known_method(std::string_view method) {
  return method == "fd" || method == "ad" || method == "hd" ||
         method == "heuristic";
}

Clustering run_method(std::string_view method, const Corpus& corpus,
                      const NicknameTable& nicknames,
                      const OriginList& origins) {
  if (method == "fd") return fd_partition(corpus);
  if (method == "ad") return ad_partition(corpus);
  if (method == "hd") return hd_partition(corpus);
  if (method == "heuristic") return cluster(corpus, nicknames, origins).clustering;
  throw DataError("unknown method '" + std::string(method) + "'");
}

std::optional<double> percent_change(std::optional<double> value,
                                     std::optional<double> reference) {
  if (!value || !reference || *reference == 0.0) return std::nullopt;
  return 100.0 * (*value - *reference) / *reference;
}

ComparisonReport compare_methods(const Corpus& corpus, const Clustering& truth,
                                 const CompareOptions& options) {
  truth.check_total(corpus);
  const NicknameTable& nicknames =
      options.nicknames != nullptr ? *options.nicknames : NicknameTable::bundled();
  const OriginList no_origins;
  const OriginList& origins = options.origins ? *options.origins : no_origins;

  ComparisonReport report;
  const MethodView ref = view_of(corpus, truth);
  report.curves["truth_productivity.csv"] = curve_csv(ref.productivity);
  report.curves["truth_degree.csv"] = curve_csv(ref.degree);

  auto& j = report.json;
  j["mentions"] = corpus.mention_count();
  j["papers"] = corpus.papers().size();
  j["truth"] = {{"unique_authors", ref.stats.unique_authors},
                {"stats", to_json(ref.stats)}};
  j["methods"] = nlohmann::ordered_json::object();

  for (const auto& method : options.methods) {
    if (method != "truth" && !is_known_method(method)) {
      throw DataError("unknown method '" + method + "'");
    }
    const MethodView m = view_of(
        corpus, method == "truth" ? truth
                                  : run_method(method, corpus, nicknames, origins));
    const auto eval = evaluate(m.clustering, truth);
    const auto walk = crosswalk(truth, m.clustering);

    nlohmann::ordered_json out;
    out["unique_authors"] = m.stats.unique_authors;
    out["unique_authors_change_pct"] = nullable(
        percent_change(count(m.stats.unique_authors), count(ref.stats.unique_authors)));
    out["eval"] = to_json(eval);
    out["stats"] = to_json(m.stats);
    out["stats_change_pct"] = stats_change(m.stats, ref.stats);
    out["top_k"] = {{"productivity", top_k_block(ref.productivity, m.productivity, walk)},
                    {"degree", top_k_block(ref.degree, m.degree, walk)}};
    if (origins.empty()) {
      out["misattribution"] = nullptr;
    } else {
      out["misattribution"] =
          to_json(misattribution_share(truth, m.clustering, corpus, origins));
    }
    j["methods"][method] = std::move(out);

    report.curves[method + "_productivity.csv"] = curve_csv(m.productivity);
    report.curves[method + "_degree.csv"] = curve_csv(m.degree);
  }
  return report;
}

}  // namespace namedis
