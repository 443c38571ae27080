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

#include "namedis/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "namedis/errors.h"
#include "namedis/names.h"

namespace namedis {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(std::string("cannot open ") + what + ": " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& body,
                const char* what) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(std::string("cannot write ") + what + ": " + path.string());
  out << body;
  if (!out) throw DataError(std::string("write failed for ") + what + ": " + path.string());
}

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void field_error(std::size_t line, const std::string& field,
                              const std::string& problem) {
  throw DataError("line " + std::to_string(line) + ": field '" + field +
                  "': " + problem);
}

std::string require_string(const json& obj, const char* key,
                           std::size_t line, const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(line, prefix + key, "missing");
  if (!it->is_string()) field_error(line, prefix + key, "expected string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           std::size_t line,
                                           const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) field_error(line, prefix + key, "expected string");
  return it->get<std::string>();
}

PaperRecord parse_paper(const json& obj, std::size_t line) {
  if (!obj.is_object()) field_error(line, "<record>", "expected object");
  PaperRecord paper;
  paper.paper_id = require_string(obj, "paper_id", line, "");
  if (auto it = obj.find("year"); it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer()) field_error(line, "year", "expected integer");
    paper.year = it->get<int>();
  }
  paper.venue = optional_string(obj, "venue", line, "");
  auto authors = obj.find("authors");
  if (authors == obj.end()) field_error(line, "authors", "missing");
  if (!authors->is_array()) field_error(line, "authors", "expected array");
  for (std::size_t i = 0; i < authors->size(); ++i) {
    const json& a = (*authors)[i];
    const std::string prefix = "authors[" + std::to_string(i) + "].";
    if (!a.is_object()) field_error(line, prefix.substr(0, prefix.size() - 1), "expected object");
    AuthorMention m;
    m.surname_raw = require_string(a, "surname", line, prefix);
    if (auto g = a.find("given"); g != a.end() && !g->is_null()) {
      if (!g->is_string()) field_error(line, prefix + "given", "expected string");
      m.given_raw = g->get<std::string>();
    }
    m.given_full_raw = optional_string(a, "given_full", line, prefix);
    if (auto af = a.find("affiliations"); af != a.end() && !af->is_null()) {
      if (!af->is_array()) field_error(line, prefix + "affiliations", "expected array");
      for (const auto& s : *af) {
        if (!s.is_string()) field_error(line, prefix + "affiliations", "expected array of strings");
        m.affiliations.push_back(s.get<std::string>());
      }
    }
    m.email = optional_string(a, "email", line, prefix);
    if (blank(m.surname_raw) || normalize_tokens(m.surname_raw).empty()) {
      field_error(line, prefix + "surname", "empty after normalization");
    }
    paper.authors.push_back(std::move(m));
  }
  return paper;
}

}  // namespace

Corpus::Corpus(std::vector<PaperRecord> papers)
    : papers_(std::move(papers)) {
  std::unordered_set<std::string> paper_ids;
  for (std::size_t p = 0; p < papers_.size(); ++p) {
    auto& paper = papers_[p];
    if (paper.paper_id.empty()) throw DataError("paper with empty paper_id");
    if (!paper_ids.insert(paper.paper_id).second) {
      throw DataError("duplicate paper_id '" + paper.paper_id + "'");
    }
    for (std::size_t i = 0; i < paper.authors.size(); ++i) {
      auto& m = paper.authors[i];
      if (normalize_tokens(m.surname_raw).empty()) {
        throw DataError("paper '" + paper.paper_id + "' author " +
                        std::to_string(i) + ": empty surname");
      }
      m.mention_id = paper.paper_id + ":" + std::to_string(i);
      if (!mention_index_.emplace(m.mention_id, mentions_.size()).second) {
        throw DataError("duplicate mention_id '" + m.mention_id + "'");
      }
      mentions_.push_back({p, i});
    }
  }
  stoplist_ = compute_stoplist(papers_);
}

const AuthorMention& Corpus::mention(std::size_t index) const {
  const auto& ref = mentions_.at(index);
  return papers_[ref.paper].authors[ref.position];
}

const PaperRecord& Corpus::paper_of(std::size_t index) const {
  return papers_[mentions_.at(index).paper];
}

std::optional<std::size_t> Corpus::find_mention(
    std::string_view mention_id) const {
  auto it = mention_index_.find(std::string(mention_id));
  if (it == mention_index_.end()) return std::nullopt;
  return it->second;
}

bool Corpus::is_stopword(std::string_view word) const {
  return std::find(stoplist_.begin(), stoplist_.end(), word) != stoplist_.end();
}

std::vector<std::string> affiliation_words(std::string_view affiliation) {
  std::vector<std::string> words;
  std::string current;
  for (char ch : affiliation) {
    const auto c = static_cast<unsigned char>(ch);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> digit_runs(std::string_view text,
                                    std::size_t min_length) {
  std::vector<std::string> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j - i >= min_length) runs.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return runs;
}

std::vector<std::string> compute_stoplist(
    const std::vector<PaperRecord>& papers, std::size_t limit) {
  std::map<std::string, std::size_t> counts;
  for (const auto& paper : papers) {
    for (const auto& m : paper.authors) {
      for (const auto& aff : m.affiliations) {
        for (auto& w : affiliation_words(aff)) ++counts[std::move(w)];
      }
    }
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(),
                                                          counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < limit; ++i) {
    out.push_back(ranked[i].first);
  }
  return out;
}

Corpus parse_corpus(std::string_view jsonl) {
  std::vector<PaperRecord> papers;
  std::map<std::string, std::size_t> seen;
  const auto lines = split_lines(jsonl);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (blank(lines[i])) continue;
    json obj;
    try {
      obj = json::parse(lines[i]);
    } catch (const json::parse_error& e) {
      throw DataError("line " + std::to_string(line_no) +
                      ": malformed JSON: " + e.what());
    }
    PaperRecord paper = parse_paper(obj, line_no);
    if (auto [it, fresh] = seen.emplace(paper.paper_id, line_no); !fresh) {
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate paper_id '" + paper.paper_id +
                      "' (first seen on line " + std::to_string(it->second) + ")");
    }
    papers.push_back(std::move(paper));
  }
  return Corpus(std::move(papers));
}

Corpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path, "corpus"));
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& paper : corpus.papers()) {
    nlohmann::ordered_json obj;
    obj["paper_id"] = paper.paper_id;
    if (paper.year) obj["year"] = *paper.year;
    if (paper.venue) obj["venue"] = *paper.venue;
    auto authors = nlohmann::ordered_json::array();
    for (const auto& m : paper.authors) {
      nlohmann::ordered_json a;
      a["surname"] = m.surname_raw;
      a["given"] = m.given_raw;
      if (m.given_full_raw) a["given_full"] = *m.given_full_raw;
      a["affiliations"] = m.affiliations;
      if (m.email) a["email"] = *m.email;
      authors.push_back(std::move(a));
    }
    obj["authors"] = std::move(authors);
    out += obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, serialize_corpus(corpus), "corpus");
}

Corpus filter_papers(const Corpus& corpus) {
  std::vector<PaperRecord> kept;
  for (const auto& paper : corpus.papers()) {
    const auto n = paper.authors.size();
    if (n >= kMinTeamSize && n <= kMaxTeamSize) kept.push_back(paper);
  }
  return Corpus(std::move(kept));
}

Clustering Clustering::from_labels(const Corpus& corpus,
                                   const std::vector<std::size_t>& labels) {
  if (labels.size() != corpus.mention_count()) {
    throw DataError("label vector does not cover the corpus");
  }
  std::map<std::size_t, const std::string*> representative;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& id = corpus.mention(i).mention_id;
    auto [it, fresh] = representative.emplace(labels[i], &id);
    if (!fresh && id < *it->second) it->second = &id;
  }
  Assignment assignment;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    assignment.emplace(corpus.mention(i).mention_id,
                       *representative.at(labels[i]));
  }
  return Clustering(std::move(assignment));
}

std::size_t Clustering::cluster_count() const {
  std::set<std::string_view> ids;
  for (const auto& [m, c] : assignment_) ids.insert(c);
  return ids.size();
}

const std::string& Clustering::cluster_of(std::string_view mention_id) const {
  auto it = assignment_.find(mention_id);
  if (it == assignment_.end()) {
    throw DataError("mention '" + std::string(mention_id) + "' has no cluster");
  }
  return it->second;
}

void Clustering::check_total(const Corpus& corpus) const {
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < corpus.mention_count(); ++i) {
    const auto& id = corpus.mention(i).mention_id;
    if (!assignment_.count(id)) missing.push_back(id);
  }
  std::vector<std::string> foreign;
  for (const auto& [m, c] : assignment_) {
    if (!corpus.find_mention(m)) foreign.push_back(m);
  }
  auto list = [](const std::vector<std::string>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size() && i < 10; ++i) s += (i ? ", " : "") + ids[i];
    if (ids.size() > 10) s += ", ... (" + std::to_string(ids.size()) + " total)";
    return s;
  };
  if (!foreign.empty()) {
    throw DataError("unknown mention ids not in corpus: " + list(foreign));
  }
  if (!missing.empty()) {
    throw DataError("corpus mentions missing from clustering: " + list(missing));
  }
}

std::vector<std::size_t> Clustering::dense_labels(const Corpus& corpus) const {
  check_total(corpus);
  std::map<std::string_view, std::size_t> index;
  for (const auto& [m, c] : assignment_) index.emplace(c, 0);
  std::size_t next = 0;
  for (auto& [c, i] : index) i = next++;
  std::vector<std::size_t> labels(corpus.mention_count());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = index.at(assignment_.find(corpus.mention(i).mention_id)->second);
  }
  return labels;
}

std::vector<std::vector<std::string>> Clustering::groups() const {
  std::map<std::string_view, std::vector<std::string>> by_cluster;
  for (const auto& [m, c] : assignment_) by_cluster[c].push_back(m);
  std::vector<std::vector<std::string>> out;
  out.reserve(by_cluster.size());
  for (auto& [c, members] : by_cluster) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_partition(const Clustering& a, const Clustering& b) {
  return a.size() == b.size() && a.groups() == b.groups();
}

bool refines(const Clustering& fine, const Clustering& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::map<std::string_view, std::string_view> fine_to_coarse;
  auto it = coarse.assignment().begin();
  for (const auto& [m, c] : fine.assignment()) {
    if (it == coarse.assignment().end() || it->first != m) return false;
    auto [pos, fresh] = fine_to_coarse.emplace(c, it->second);
    if (!fresh && pos->second != it->second) return false;
    ++it;
  }
  return true;
}

Clustering parse_labels(std::string_view tsv) {
  Clustering::Assignment assignment;
  std::map<std::string, std::size_t, std::less<>> first_line;
  const auto lines = split_lines(tsv);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw DataError("labels line " + std::to_string(line_no) +
                      ": expected 'mention_id<TAB>cluster_id'");
    }
    std::string mention(line.substr(0, tab));
    std::string cluster(line.substr(tab + 1));
    if (mention.empty() || cluster.empty()) {
      throw DataError("labels line " + std::to_string(line_no) + ": empty field");
    }
    if (auto it = first_line.find(mention); it != first_line.end()) {
      throw DataError("labels line " + std::to_string(line_no) +
                      ": duplicate mention_id '" + mention +
                      "' (first on line " + std::to_string(it->second) + ")");
    }
    first_line.emplace(mention, line_no);
    assignment.emplace(std::move(mention), std::move(cluster));
  }
  return Clustering(std::move(assignment));
}

Clustering read_labels(const std::filesystem::path& path) {
  return parse_labels(read_file(path, "labels"));
}

Clustering read_labels(const std::filesystem::path& path,
                       const Corpus& corpus) {
  Clustering c = read_labels(path);
  c.check_total(corpus);
  return c;
}

std::string serialize_labels(const Clustering& clustering) {
  std::string out;
  for (const auto& [m, c] : clustering.assignment()) {
    out += m;
    out += '\t';
    out += c;
    out += '\n';
  }
  return out;
}

void write_labels(const Clustering& clustering,
                  const std::filesystem::path& path) {
  write_file(path, serialize_labels(clustering), "labels");
}

}  // namespace namedis
