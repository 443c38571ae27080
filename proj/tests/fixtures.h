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


// Small builders shared by the unit and acceptance tests.

#ifndef NAMEDIS_TESTS_FIXTURES_H_
#define NAMEDIS_TESTS_FIXTURES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "namedis/corpus.h"
#include "namedis/netstats.h"
#include "oracle/graph_oracle.h"

namespace namedis::testing {

struct Name {
  std::string surname;
  std::string given;
  std::optional<std::string> full = std::nullopt;
  std::vector<std::string> affiliations = {};
  std::optional<std::string> email = std::nullopt;
};

// Papers are named p0, p1, ... in order.
inline Corpus make_corpus(const std::vector<std::vector<Name>>& papers) {
  std::vector<PaperRecord> records;
  for (std::size_t p = 0; p < papers.size(); ++p) {
    PaperRecord r;
    r.paper_id = "p" + std::to_string(p);
    for (const auto& n : papers[p]) {
      AuthorMention m;
      m.surname_raw = n.surname;
      m.given_raw = n.given;
      m.given_full_raw = n.full;
      m.affiliations = n.affiliations;
      m.email = n.email;
      r.authors.push_back(std::move(m));
    }
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records));
}

// Mention ids m00, m01, ...; cluster ids c<label>.
inline Clustering clustering_of(const std::vector<int>& labels) {
  Clustering::Assignment a;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string id = (i < 10 ? "m0" : "m") + std::to_string(i);
    a.emplace(id, "c" + std::to_string(labels[i]));
  }
  return Clustering(std::move(a));
}

// Random labels over `n` elements with at most `max_clusters` labels.
inline std::vector<int> random_labels(std::mt19937_64& rng, std::size_t n,
                                      int max_clusters) {
  std::uniform_int_distribution<int> pick(0, max_clusters - 1);
  std::vector<int> labels(n);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

struct RandomGraph {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;

  CoauthorGraph graph() const {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back((i < 10 ? "n0" : "n") + std::to_string(i));
    return CoauthorGraph(ids, edges);
  }
  oracle::DenseGraph dense() const {
    oracle::DenseGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }
};

// Up to `max_nodes` nodes with a per-graph edge probability, including
// duplicates and self-loops that the graph must discard.
inline RandomGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes) {
  RandomGraph g;
  g.n = std::uniform_int_distribution<std::size_t>(1, max_nodes)(rng);
  const double p = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
  std::bernoulli_distribution edge(p);
  for (NodeId u = 0; u < g.n; ++u) {
    for (NodeId v = u + 1; v < g.n; ++v) {
      if (edge(rng)) g.edges.emplace_back(v, u);
    }
  }
  if (g.n > 1 && !g.edges.empty()) g.edges.push_back(g.edges.front());
  g.edges.emplace_back(0, 0);
  return g;
}

struct IsolatedCorpus {
  Corpus corpus;
  Clustering truth;
};

// Moves every mention onto a paper of its own, paired with a filler
// coauthor whose name matches no other name and who shares no evidence.
// Coauthor similarity is then zero for every candidate pair.
inline IsolatedCorpus isolate_bylines(const Corpus& corpus, const Clustering& truth) {
  std::vector<PaperRecord> papers;
  Clustering::Assignment labels;
  for (std::size_t i = 0; i < corpus.mention_count(); ++i) {
    const AuthorMention& m = corpus.mention(i);
    PaperRecord r;
    r.paper_id = "iso" + std::to_string(i);
    AuthorMention real = m;
    AuthorMention filler;
    // Base-26 digits of i, each written three times: distinct fillers are
    // at least three edits apart.
    std::string tag;
    std::size_t k = i;
    do {
      tag.append(3, static_cast<char>('a' + k % 26));
      k /= 26;
    } while (k > 0);
    filler.surname_raw = "Fill" + tag;
    filler.given_raw = "Q.";
    r.authors = {real, filler};
    labels.emplace(r.paper_id + ":0", truth.cluster_of(m.mention_id));
    labels.emplace(r.paper_id + ":1", "filler" + std::to_string(i));
    papers.push_back(std::move(r));
  }
  return {Corpus(std::move(papers)), Clustering(std::move(labels))};
}

}  // namespace namedis::testing

#endif  // NAMEDIS_TESTS_FIXTURES_H_
