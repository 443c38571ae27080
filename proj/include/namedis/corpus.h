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

#ifndef NAMEDIS_CORPUS_H_
#define NAMEDIS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace namedis {

struct AuthorMention {
  std::string mention_id;  // "paperId:index", assigned by Corpus
  std::string surname_raw;
  std::string given_raw;
  std::optional<std::string> given_full_raw;
  std::vector<std::string> affiliations;  // empty means "not available"
  std::optional<std::string> email;

  bool operator==(const AuthorMention&) const = default;
};

struct PaperRecord {
  std::string paper_id;
  std::optional<int> year;
  std::optional<std::string> venue;
  std::vector<AuthorMention> authors;

  bool operator==(const PaperRecord&) const = default;
};

// Location of a mention inside a corpus.
struct MentionRef {
  std::size_t paper = 0;
  std::size_t position = 0;
};

// An immutable set of papers. Construction validates identifiers, assigns
// mention ids, and computes the affiliation stoplist.
class Corpus {
 public:
  static constexpr std::size_t kStoplistSize = 20;

  Corpus() = default;
  explicit Corpus(std::vector<PaperRecord> papers);

  const std::vector<PaperRecord>& papers() const { return papers_; }
  const std::vector<std::string>& affiliation_stoplist() const {
    return stoplist_;
  }

  // Mentions in paper order, then byline order. Dense mention indices used
  // throughout the library refer to positions in this list.
  const std::vector<MentionRef>& mentions() const { return mentions_; }
  std::size_t mention_count() const { return mentions_.size(); }
  const AuthorMention& mention(std::size_t index) const;
  const PaperRecord& paper_of(std::size_t index) const;
  std::optional<std::size_t> find_mention(std::string_view mention_id) const;
  bool is_stopword(std::string_view word) const;

 private:
  std::vector<PaperRecord> papers_;
  std::vector<std::string> stoplist_;
  std::vector<MentionRef> mentions_;
  std::unordered_map<std::string, std::size_t> mention_index_;
};

// Case-folded alphabetic words of an affiliation string. Digit runs are not
// words; see digit_runs().
std::vector<std::string> affiliation_words(std::string_view affiliation);

// Maximal runs of ASCII digits with at least `min_length` characters.
std::vector<std::string> digit_runs(std::string_view text,
                                    std::size_t min_length);

// The `limit` most frequent words across all mention affiliations, ties
// broken lexicographically.
std::vector<std::string> compute_stoplist(
    const std::vector<PaperRecord>& papers,
    std::size_t limit = Corpus::kStoplistSize);

// JSONL, one paper per line. Throws DataError with the line number and the
// offending field on malformed input or duplicate ids.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view jsonl);
std::string serialize_corpus(const Corpus& corpus);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Keeps papers with 2..99 authors.
Corpus filter_papers(const Corpus& corpus);

inline constexpr std::size_t kMinTeamSize = 2;
inline constexpr std::size_t kMaxTeamSize = 99;

// A total assignment of mention ids to opaque cluster ids.
class Clustering {
 public:
  using Assignment = std::map<std::string, std::string, std::less<>>;

  Clustering() = default;
  explicit Clustering(Assignment assignment)
      : assignment_(std::move(assignment)) {}

  // Labels each mention of `corpus` by `labels[i]`; every group is named by
  // its lexicographically smallest mention id, so the result does not depend
  // on the numbering of labels or the order of papers.
  static Clustering from_labels(const Corpus& corpus,
                                const std::vector<std::size_t>& labels);

  const Assignment& assignment() const { return assignment_; }
  std::size_t size() const { return assignment_.size(); }
  std::size_t cluster_count() const;
  const std::string& cluster_of(std::string_view mention_id) const;

  // Dense cluster index for every corpus mention, in corpus order. Throws
  // DataError naming missing or foreign mention ids.
  std::vector<std::size_t> dense_labels(const Corpus& corpus) const;
  void check_total(const Corpus& corpus) const;

  // Groups of mention ids, each sorted; groups sorted by first member.
  std::vector<std::vector<std::string>> groups() const;

  bool operator==(const Clustering&) const = default;

 private:
  Assignment assignment_;
};

// Same grouping of the same mention set, ignoring cluster ids.
bool same_partition(const Clustering& a, const Clustering& b);

// True iff every cluster of `fine` lies inside one cluster of `coarse`.
bool refines(const Clustering& fine, const Clustering& coarse);

// TSV "mention_id<TAB>cluster_id". The corpus overload also rejects unknown
// mention ids and reports mentions the file does not cover.
Clustering read_labels(const std::filesystem::path& path);
Clustering read_labels(const std::filesystem::path& path, const Corpus& corpus);
Clustering parse_labels(std::string_view tsv);
void write_labels(const Clustering& clustering,
                  const std::filesystem::path& path);
std::string serialize_labels(const Clustering& clustering);

}  // namespace namedis

#endif  // NAMEDIS_CORPUS_H_
