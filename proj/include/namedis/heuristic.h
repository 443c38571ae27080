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

// Similarity-based author disambiguation.
//
// Candidate pairs come from four name-string tests: identical names
// (homonym candidates), equal token counts with initialized matches, a
// shorter name embedded positionally in a longer one, and fuzzy variants
// (joined tokens, nicknames and partial names, one-letter edits, permuted
// tokens). Every candidate is scored on shared coauthors, affiliation words
// and email local part; the unweighted sum is compared against a per-kind
// threshold. Matches are merged strongest first, and homonym pairs that fail
// the threshold act as cannot-link constraints on every merge.

#ifndef NAMEDIS_HEURISTIC_H_
#define NAMEDIS_HEURISTIC_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "namedis/corpus.h"
#include "namedis/names.h"

namespace namedis {

// Parsed names and paper membership for every mention. The given name is
// taken from the full form when recorded, else from the raw form.
class PreparedCorpus {
 public:
  explicit PreparedCorpus(const Corpus& corpus);

  const Corpus& corpus() const { return *corpus_; }
  std::size_t size() const { return names_.size(); }
  const ParsedName& name(std::size_t i) const { return names_[i]; }
  std::size_t paper(std::size_t i) const { return papers_[i]; }
  const AuthorMention& mention(std::size_t i) const {
    return corpus_->mention(i);
  }
  const std::string& id(std::size_t i) const {
    return corpus_->mention(i).mention_id;
  }
  // Dense indices of the mentions on paper `p`, in byline order.
  std::span<const std::size_t> byline(std::size_t p) const;

 private:
  const Corpus* corpus_;
  std::vector<ParsedName> names_;
  std::vector<std::size_t> papers_;
  std::vector<std::size_t> byline_offsets_;
  std::vector<std::size_t> dense_;
};

enum class PairKind { kHomonym, kSynonym };

std::string_view to_string(PairKind kind);

struct CandidatePair {
  std::size_t a = 0;  // dense mention index, a < b
  std::size_t b = 0;
  PairKind kind = PairKind::kSynonym;
  int step = 0;                    // 1..4
  std::optional<int> match_case;   // 1..4, step 4 only

  bool operator==(const CandidatePair&) const = default;
};

// Pair-level name tests. Each is symmetric.
bool identical_names(const ParsedName& a, const ParsedName& b);
bool equal_token_match(const ParsedName& a, const ParsedName& b);
bool subset_match(const ParsedName& a, const ParsedName& b);
bool joined_token_match(const ParsedName& a, const ParsedName& b);
bool nickname_variant_match(const ParsedName& a, const ParsedName& b,
                            const NicknameTable& table);
bool one_edit_variant_match(const ParsedName& a, const ParsedName& b,
                            const OriginList& origins);
bool permuted_match(const ParsedName& a, const ParsedName& b);

// The fuzzy case (1..4) that first admits the pair, if any. Pairs already
// admitted by the positional tests are not fuzzy candidates.
std::optional<int> fuzzy_case(const ParsedName& a, const ParsedName& b,
                              const NicknameTable& table,
                              const OriginList& origins);

// Candidate generation. Pairs on the same paper are never candidates.
// Results are sorted by (a, b).
std::vector<CandidatePair> step1_homonym_pairs(const PreparedCorpus& pc);
std::vector<CandidatePair> step2_equal_token_pairs(const PreparedCorpus& pc);
std::vector<CandidatePair> step3_subset_pairs(const PreparedCorpus& pc);
std::vector<CandidatePair> step4_fuzzy_pairs(const PreparedCorpus& pc,
                                             const NicknameTable& nicknames,
                                             const OriginList& origins);
// Union of all four steps; steps are disjoint by construction.
std::vector<CandidatePair> candidate_pairs(const PreparedCorpus& pc,
                                           const NicknameTable& nicknames,
                                           const OriginList& origins);

inline constexpr double kFullCoauthorMatch = 1.0;
inline constexpr double kInitializedCoauthorMatch = 0.3;
inline constexpr double kZipCodeBonus = 0.5;
inline constexpr std::size_t kZipCodeMinDigits = 4;
inline constexpr double kHomonymThreshold = 0.50;
inline constexpr double kSynonymThreshold = 0.75;
inline constexpr double kReviewFloor = 0.40;

struct SimilarityProfile {
  double coauthor_score = 0.0;
  double affiliation_score = 0.0;
  int email_score = 0;

  double total() const { return coauthor_score + affiliation_score + email_score; }
};

double coauthor_similarity(const PreparedCorpus& pc, std::size_t a,
                           std::size_t b);
// Score of one affiliation string pair.
double affiliation_pair_similarity(std::string_view a, std::string_view b,
                                   std::span<const std::string> stoplist);
// Maximum over all affiliation pairs; zero if either side has none.
double affiliation_similarity(const AuthorMention& a, const AuthorMention& b,
                              std::span<const std::string> stoplist);
int email_similarity(const AuthorMention& a, const AuthorMention& b);
SimilarityProfile score_pair(const PreparedCorpus& pc, std::size_t a,
                             std::size_t b);

enum class Outcome { kMatch, kNonMatch, kReview };

std::string_view to_string(Outcome outcome);

struct Decision {
  Outcome outcome = Outcome::kNonMatch;
  double threshold_used = kSynonymThreshold;
};

// Match iff total > threshold; Review iff 0.40 <= total <= threshold.
// Comparisons absorb floating-point noise below 1e-9.
Decision decide(const SimilarityProfile& profile, PairKind kind);

struct ScoredPair {
  CandidatePair pair;
  SimilarityProfile profile;
  Decision decision;
};

// One scored match offered to the constrained merge.
struct MergeCandidate {
  std::size_t a = 0;
  std::size_t b = 0;
  double score = 0.0;
  std::string id_a;  // tie-break keys, id_a < id_b
  std::string id_b;
};

struct ConstrainedMergeResult {
  std::vector<std::size_t> labels;           // root per element
  std::vector<std::size_t> blocked;          // indices into the input
  std::vector<std::size_t> applied;          // indices into the input
};

// Applies merges in descending score order (ties by (id_a, id_b)), skipping
// any merge that would put both ends of a cannot-link pair in one cluster.
ConstrainedMergeResult constrained_merge(
    std::size_t n, const std::vector<MergeCandidate>& matches,
    std::span<const std::pair<std::size_t, std::size_t>> cannot_links);

struct HeuristicResult {
  Clustering clustering;
  std::vector<ScoredPair> scored;          // every candidate, sorted by (a, b)
  std::vector<ScoredPair> review_pairs;
  std::vector<ScoredPair> blocked_merges;
  std::vector<std::pair<std::size_t, std::size_t>> cannot_links;
};

HeuristicResult cluster(const Corpus& corpus, const NicknameTable& nicknames,
                        const OriginList& origins);

// TSV "mention_a<TAB>mention_b<TAB>kind<TAB>total_score".
std::string serialize_pairs(const Corpus& corpus,
                            std::span<const ScoredPair> pairs);

}  // namespace namedis

#endif  // NAMEDIS_HEURISTIC_H_
