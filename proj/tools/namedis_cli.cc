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


// namedis: generate corpora, disambiguate author names, and measure how
// each disambiguation choice changes the coauthorship network.
//
//   namedis gen -o corpus.jsonl --truth truth.tsv --origins origins.txt
//   namedis run --method hd corpus.jsonl -o hd.tsv
//   namedis eval --truth truth.tsv --pred hd.tsv -o eval.json
//   namedis stats --clusters hd.tsv corpus.jsonl -o stats.json
//   namedis compare corpus.jsonl --truth truth.tsv -o report.json
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "namedis/corpus.h"
#include "namedis/errors.h"
#include "namedis/evalmetrics.h"
#include "namedis/heuristic.h"
#include "namedis/names.h"
#include "namedis/netstats.h"
#include "namedis/report.h"
#include "namedis/synthetic.h"

namespace fs = std::filesystem;
using namedis::DataError;

namespace {

constexpr int kUsage = 1;
constexpr int kDataError = 2;

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << body;
  out.close();
  if (!out) throw DataError("write failed for " + path.string());
}

std::string dump(const nlohmann::ordered_json& j) {
  return j.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

// Loads a corpus and drops papers outside the 2..99 author range.
namedis::Corpus load_filtered(const fs::path& path) {
  return namedis::filter_papers(namedis::load_corpus(path));
}

// Labels for the filtered corpus. Rows naming mentions of papers removed
// by the filter are dropped; rows naming mentions absent from the raw
// corpus are errors.
namedis::Clustering load_labels(const fs::path& labels, const fs::path& corpus_path,
                                const namedis::Corpus& filtered) {
  const auto all = namedis::read_labels(labels);
  namedis::Clustering::Assignment kept;
  std::optional<namedis::Corpus> raw;
  for (const auto& [mention, cluster] : all.assignment()) {
    if (filtered.find_mention(mention)) {
      kept.emplace(mention, cluster);
      continue;
    }
    if (!raw) raw = namedis::load_corpus(corpus_path);
    if (!raw->find_mention(mention)) {
      throw DataError(labels.string() + ": unknown mention id '" + mention + "'");
    }
  }
  namedis::Clustering out(std::move(kept));
  out.check_total(filtered);
  return out;
}

const namedis::NicknameTable& nicknames_from(const std::string& path,
                                             std::optional<namedis::NicknameTable>& storage) {
  if (path.empty()) return namedis::NicknameTable::bundled();
  storage = namedis::NicknameTable::load(path);
  return *storage;
}

namedis::OriginList origins_from(const std::string& path) {
  return path.empty() ? namedis::OriginList() : namedis::OriginList::load(path);
}

struct GenArgs {
  namedis::SyntheticSpec spec;
  std::string corpus, truth, origins;
};

struct RunArgs {
  std::string method, corpus, out, review, blocked, nicknames, origins;
};

struct EvalArgs {
  std::string truth, pred, out;
};

struct StatsArgs {
  std::string clusters, corpus, out, dist;
};

struct CompareArgs {
  std::string corpus, truth, out, curves, origins, nicknames;
  bool heuristic = false;
};

void add_gen(CLI::App& app, GenArgs& a) {
  auto& s = a.spec;
  auto* g = app.add_subcommand("gen", "Generate a synthetic corpus with ground truth");
  g->add_option("-o,--output", a.corpus, "Corpus JSONL to write")->required();
  g->add_option("--truth", a.truth, "Ground-truth labels TSV to write")->required();
  g->add_option("--origins", a.origins, "Collision-pool surname list to write")->required();
  g->add_option("--papers", s.n_papers, "Number of papers")->capture_default_str();
  g->add_option("--authors", s.n_authors, "Number of authors")->capture_default_str();
  g->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  g->add_option("--team-mean", s.team_size_mean, "Mean team size")->capture_default_str();
  g->add_option("--team-min", s.min_team, "Smallest team")->capture_default_str();
  g->add_option("--team-max", s.max_team, "Largest team")->capture_default_str();
  g->add_option("--surname-pool", s.surname_pool_size, "Surname pool size")->capture_default_str();
  g->add_option("--surname-zipf", s.surname_zipf_exponent, "Zipf exponent of surname frequency")
      ->capture_default_str();
  g->add_option("--collision-surnames", s.collision_surname_count,
                "Surnames in the collision pool")->capture_default_str();
  const auto prob = CLI::Range(0.0, 1.0);
  g->add_option("--collision-share", s.collision_pool_share,
                "Share of authors drawn from the collision pool")
      ->check(prob)->capture_default_str();
  g->add_option("--full-given", s.full_given_name_probability,
                "Chance a mention records the full given name")->check(prob)->capture_default_str();
  g->add_option("--email-coverage", s.email_coverage, "Chance a mention has an email")
      ->check(prob)->capture_default_str();
  g->add_option("--affiliation-coverage", s.affiliation_coverage,
                "Chance a mention has an affiliation")->check(prob)->capture_default_str();
  g->add_option("--two-token", s.two_token_given_probability,
                "Chance an author has a middle name")->check(prob)->capture_default_str();
  g->add_option("--middle-omission", s.middle_name_omission_probability,
                "Chance a mention drops the middle name")->check(prob)->capture_default_str();
  g->add_option("--group-size", s.group_size_mean, "Mean research-group size")
      ->capture_default_str();
  g->add_option("--cross-group", s.cross_group_probability,
                "Chance a coauthor comes from another group")->check(prob)->capture_default_str();
}

int cmd_gen(const GenArgs& a) {
  const auto g = namedis::generate_synthetic(a.spec);
  namedis::save_corpus(g.corpus, a.corpus);
  namedis::write_labels(g.truth, a.truth);
  g.origins.save(a.origins);
  return 0;
}

int cmd_run(const RunArgs& a) {
  const auto corpus = load_filtered(a.corpus);
  std::optional<namedis::NicknameTable> table;
  const auto& nicknames = nicknames_from(a.nicknames, table);
  const auto origins = origins_from(a.origins);
  if (a.method == "heuristic") {
    const auto r = namedis::cluster(corpus, nicknames, origins);
    namedis::write_labels(r.clustering, a.out);
    if (!a.review.empty()) {
      write_text(a.review, namedis::serialize_pairs(corpus, r.review_pairs));
    }
    if (!a.blocked.empty()) {
      write_text(a.blocked, namedis::serialize_pairs(corpus, r.blocked_merges));
    }
    return 0;
  }
  namedis::write_labels(namedis::run_method(a.method, corpus, nicknames, origins), a.out);
  return 0;
}

int cmd_eval(const EvalArgs& a) {
  const auto truth = namedis::read_labels(a.truth);
  const auto pred = namedis::read_labels(a.pred);
  write_text(a.out, dump(namedis::to_json(namedis::evaluate(pred, truth))));
  return 0;
}

// --dist out.csv writes out.productivity.csv and out.degree.csv.
int cmd_stats(const StatsArgs& a) {
  const auto corpus = load_filtered(a.corpus);
  const auto clusters = load_labels(a.clusters, a.corpus, corpus);
  const auto graph = namedis::build_graph(corpus, clusters);
  const auto stats = namedis::compute_stats(corpus, clusters, graph);
  write_text(a.out, dump(namedis::to_json(stats)));
  if (!a.dist.empty()) {
    const fs::path dist(a.dist);
    const fs::path stem = dist.parent_path() / dist.stem();
    auto curve = [](const std::map<std::string, std::uint32_t>& values) {
      std::vector<std::uint32_t> flat;
      for (const auto& [id, v] : values) flat.push_back(v);
      return namedis::serialize_curve(namedis::cumulative_distribution(flat));
    };
    write_text(stem.string() + ".productivity.csv",
               curve(namedis::productivity(corpus, clusters)));
    write_text(stem.string() + ".degree.csv", curve(namedis::degree_map(graph)));
  }
  return 0;
}

int cmd_compare(const CompareArgs& a) {
  const auto corpus = load_filtered(a.corpus);
  const auto truth = load_labels(a.truth, a.corpus, corpus);
  std::optional<namedis::NicknameTable> table;
  namedis::CompareOptions options;
  options.nicknames = &nicknames_from(a.nicknames, table);
  if (!a.origins.empty()) options.origins = namedis::OriginList::load(a.origins);
  if (a.heuristic) options.methods.push_back("heuristic");
  const auto report = namedis::compare_methods(corpus, truth, options);
  write_text(a.out, dump(report.json));
  if (!a.curves.empty()) {
    fs::create_directories(a.curves);
    for (const auto& [name, csv] : report.curves) write_text(fs::path(a.curves) / name, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Author name disambiguation and coauthorship-network distortion"};
  app.name("namedis");
  app.require_subcommand(1);

  GenArgs gen;
  add_gen(app, gen);

  RunArgs run;
  auto* r = app.add_subcommand("run", "Disambiguate a corpus");
  r->add_option("--method", run.method, "fd, ad, hd or heuristic")
      ->required()
      ->check(CLI::IsMember({"fd", "ad", "hd", "heuristic"}));
  r->add_option("corpus", run.corpus, "Corpus JSONL")->required();
  r->add_option("-o,--output", run.out, "Cluster labels TSV to write")->required();
  r->add_option("--review", run.review, "Review pairs TSV (heuristic)");
  r->add_option("--blocked", run.blocked, "Blocked merges TSV (heuristic)");
  r->add_option("--nicknames", run.nicknames, "Nickname TSV; bundled table when absent");
  r->add_option("--origins", run.origins, "Surname origin list");

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Score predicted clusters against truth");
  e->add_option("--truth", eval.truth, "Reference labels TSV")->required();
  e->add_option("--pred", eval.pred, "Predicted labels TSV")->required();
  e->add_option("-o,--output", eval.out, "Report JSON to write")->required();

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Coauthorship-network statistics");
  s->add_option("--clusters", stats.clusters, "Cluster labels TSV")->required();
  s->add_option("corpus", stats.corpus, "Corpus JSONL")->required();
  s->add_option("-o,--output", stats.out, "Statistics JSON to write")->required();
  s->add_option("--dist", stats.dist,
                "Distribution CSV path; writes <stem>.productivity.csv and <stem>.degree.csv");

  CompareArgs compare;
  auto* c = app.add_subcommand("compare", "Compare FD, AD and HD (and the heuristic) with truth");
  c->add_option("corpus", compare.corpus, "Corpus JSONL")->required();
  c->add_option("--truth", compare.truth, "Reference labels TSV")->required();
  c->add_option("-o,--output", compare.out, "Report JSON to write")->required();
  c->add_option("--curves", compare.curves, "Directory for distribution CSVs");
  c->add_option("--origins", compare.origins, "Surname origin list");
  c->add_option("--nicknames", compare.nicknames, "Nickname TSV for the heuristic");
  c->add_flag("--heuristic", compare.heuristic, "Also evaluate the heuristic method");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cerr << "namedis: usage error: " << ex.what() << " (see --help)\n";
    return kUsage;
  }

  try {
    if (app.got_subcommand("gen")) return cmd_gen(gen);
    if (app.got_subcommand("run")) return cmd_run(run);
    if (app.got_subcommand("eval")) return cmd_eval(eval);
    if (app.got_subcommand("stats")) return cmd_stats(stats);
    if (app.got_subcommand("compare")) return cmd_compare(compare);
  } catch (const DataError& ex) {
    std::cerr << "namedis: error: " << ex.what() << "\n";
    return kDataError;
  } catch (const std::exception& ex) {
    std::cerr << "namedis: error: " << ex.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
