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

#include "namedis/heuristic.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>

#include "namedis/union_find.h"

namespace namedis {
namespace {

constexpr double kEpsilon = 1e-9;
// Names with more tokens skip the permutation search.
constexpr std::size_t kMaxPermutedTokens = 6;
constexpr char kSep = '\x1f';

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

std::string full_key(const ParsedName& n) {
  std::string key;
  for (const auto& t : n.surname_tokens) {
    key += t;
    key += kSep;
  }
  key += '|';
  for (const auto& t : n.given_tokens) {
    key += kSep;
    key += t.text;
  }
  return key;
}

std::string surname_key(const ParsedName& n) {
  std::string key;
  for (const auto& t : n.surname_tokens) {
    key += t;
    key += kSep;
  }
  return key;
}

std::string signature_key(const ParsedName& n) {
  std::string key;
  for (const auto& t : n.given_tokens) {
    key += first_letter(t.text);
    key += kSep;
  }
  return key;
}

bool given_positional_match(const ParsedName& a, const ParsedName& b) {
  if (a.given_tokens.size() != b.given_tokens.size()) return false;
  for (std::size_t i = 0; i < a.given_tokens.size(); ++i) {
    if (token_match(a.given_tokens[i].text, b.given_tokens[i].text) ==
        TokenMatch::kNone) {
      return false;
    }
  }
  return true;
}

// Position of the single given token that fails positional matching, when
// counts agree and exactly one position fails.
std::optional<std::size_t> single_given_mismatch(const ParsedName& a,
                                                 const ParsedName& b) {
  if (a.given_tokens.size() != b.given_tokens.size()) return std::nullopt;
  std::optional<std::size_t> where;
  for (std::size_t i = 0; i < a.given_tokens.size(); ++i) {
    if (token_match(a.given_tokens[i].text, b.given_tokens[i].text) ==
        TokenMatch::kNone) {
      if (where) return std::nullopt;
      where = i;
    }
  }
  return where;
}

struct Token {
  std::string_view text;
  bool surname;
};

std::vector<Token> all_tokens(const ParsedName& n) {
  std::vector<Token> out;
  for (const auto& t : n.surname_tokens) out.push_back({t, true});
  for (const auto& t : n.given_tokens) out.push_back({t.text, false});
  return out;
}

std::string concat(const std::vector<Token>& tokens,
                   const std::vector<std::size_t>& order) {
  std::string s;
  for (auto i : order) s += tokens[i].text;
  return s;
}

std::string concat_in_order(const std::vector<Token>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += t.text;
  return s;
}

// Some ordering of `permuted`'s tokens spells the same letters as `fixed`.
bool concatenation_permutes(const std::vector<Token>& fixed,
                            const std::vector<Token>& permuted) {
  const std::string target = concat_in_order(fixed);
  std::vector<std::size_t> order(permuted.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  do {
    if (concat(permuted, order) == target) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Visits every unordered pair of mentions that sit in the same bucket but
// carry different full names. Each bucket maps an exact-name key to members.
using Bucket = std::map<std::string, std::vector<std::size_t>>;

template <typename Fn>
void for_cross_group_pairs(const std::unordered_map<std::string, Bucket>& index,
                           Fn&& fn) {
  for (const auto& [key, bucket] : index) {
    if (bucket.size() < 2) continue;
    for (auto g1 = bucket.begin(); g1 != bucket.end(); ++g1) {
      for (auto g2 = std::next(g1); g2 != bucket.end(); ++g2) {
        for (auto x : g1->second) {
          for (auto y : g2->second) fn(x, y);
        }
      }
    }
  }
}

void sort_pairs(std::vector<CandidatePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

CandidatePair make_pair(std::size_t x, std::size_t y, PairKind kind, int step,
                        std::optional<int> match_case = std::nullopt) {
  return {std::min(x, y), std::max(x, y), kind, step, match_case};
}

std::string local_part(std::string_view email) {
  const auto at = email.find('@');
  std::string_view local = email.substr(0, at);
  std::string out;
  for (char c : local) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) continue;
    out.push_back(static_cast<char>(std::tolower(u)));
  }
  return out;
}

std::vector<std::string> content_words(std::string_view affiliation,
                                       std::span<const std::string> stoplist) {
  auto words = affiliation_words(affiliation);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::erase_if(words, [&](const std::string& w) {
    return std::find(stoplist.begin(), stoplist.end(), w) != stoplist.end();
  });
  return words;
}

// Positional candidates (steps 2 and 3) share one blocking pass: both need
// equal surname tokens and the same first initial.
std::vector<CandidatePair> positional_pairs(const PreparedCorpus& pc,
                                            int wanted_step) {
  std::unordered_map<std::string, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    const auto& n = pc.name(i);
    if (n.given_tokens.empty()) continue;
    blocks[surname_key(n) + std::string(first_letter(n.given_tokens[0].text))]
        .push_back(i);
  }
  std::vector<CandidatePair> out;
  for (const auto& [key, members] : blocks) {
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        const auto x = members[p];
        const auto y = members[q];
        if (pc.paper(x) == pc.paper(y)) continue;
        const auto& a = pc.name(x);
        const auto& b = pc.name(y);
        if (wanted_step == 2 ? equal_token_match(a, b) : subset_match(a, b)) {
          out.push_back(make_pair(x, y, PairKind::kSynonym, wanted_step));
        }
      }
    }
  }
  sort_pairs(out);
  return out;
}

}  // namespace

PreparedCorpus::PreparedCorpus(const Corpus& corpus) : corpus_(&corpus) {
  names_.reserve(corpus.mention_count());
  papers_.reserve(corpus.mention_count());
  byline_offsets_.push_back(0);
  for (std::size_t i = 0; i < corpus.mention_count(); ++i) {
    const auto& m = corpus.mention(i);
    const std::string& given =
        m.given_full_raw && !blank(*m.given_full_raw) ? *m.given_full_raw
                                                      : m.given_raw;
    names_.push_back(parse_name(m.surname_raw, given));
    papers_.push_back(corpus.mentions()[i].paper);
  }
  dense_.resize(corpus.mention_count());
  for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] = i;
  std::size_t offset = 0;
  for (const auto& paper : corpus.papers()) {
    offset += paper.authors.size();
    byline_offsets_.push_back(offset);
  }
}

std::span<const std::size_t> PreparedCorpus::byline(std::size_t p) const {
  const auto begin = byline_offsets_[p];
  return std::span<const std::size_t>(dense_).subspan(
      begin, byline_offsets_[p + 1] - begin);
}

std::string_view to_string(PairKind kind) {
  return kind == PairKind::kHomonym ? "homonym" : "synonym";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kMatch:
      return "match";
    case Outcome::kReview:
      return "review";
    case Outcome::kNonMatch:
      break;
  }
  return "nonmatch";
}

bool identical_names(const ParsedName& a, const ParsedName& b) {
  return a.surname_tokens == b.surname_tokens &&
         a.given_tokens.size() == b.given_tokens.size() &&
         std::equal(a.given_tokens.begin(), a.given_tokens.end(),
                    b.given_tokens.begin(),
                    [](const auto& x, const auto& y) { return x.text == y.text; });
}

bool equal_token_match(const ParsedName& a, const ParsedName& b) {
  return a.surname_tokens == b.surname_tokens && !identical_names(a, b) &&
         given_positional_match(a, b);
}

bool subset_match(const ParsedName& a, const ParsedName& b) {
  if (a.surname_tokens != b.surname_tokens) return false;
  if (a.given_tokens.size() == b.given_tokens.size()) return false;
  const auto& shorter = a.given_tokens.size() < b.given_tokens.size() ? a : b;
  const auto& longer = a.given_tokens.size() < b.given_tokens.size() ? b : a;
  if (shorter.given_tokens.empty()) return false;
  for (std::size_t i = 0; i < shorter.given_tokens.size(); ++i) {
    if (token_match(shorter.given_tokens[i].text, longer.given_tokens[i].text) ==
        TokenMatch::kNone) {
      return false;
    }
  }
  return true;
}

bool joined_token_match(const ParsedName& a, const ParsedName& b) {
  if (identical_names(a, b)) return false;
  return a.joined_surname() == b.joined_surname() &&
         join_tokens(a.given_texts()) == join_tokens(b.given_texts()) &&
         (a.surname_tokens.size() != b.surname_tokens.size() ||
          a.given_tokens.size() != b.given_tokens.size());
}

bool nickname_variant_match(const ParsedName& a, const ParsedName& b,
                            const NicknameTable& table) {
  if (a.surname_tokens != b.surname_tokens) return false;
  const auto pos = single_given_mismatch(a, b);
  if (!pos) return false;
  const auto& x = a.given_tokens[*pos].text;
  const auto& y = b.given_tokens[*pos].text;
  if (letter_count(x) < 2 || letter_count(y) < 2) return false;
  return nickname_match(x, y, table);
}

bool one_edit_variant_match(const ParsedName& a, const ParsedName& b,
                            const OriginList& origins) {
  if (in_origin_list(a.surname_tokens, origins) ||
      in_origin_list(b.surname_tokens, origins)) {
    return false;
  }
  if (a.surname_tokens == b.surname_tokens) {
    const auto pos = single_given_mismatch(a, b);
    if (!pos) return false;
    const auto& x = a.given_tokens[*pos].text;
    const auto& y = b.given_tokens[*pos].text;
    return letter_count(x) >= 2 && letter_count(y) >= 2 &&
           edit_distance_one(x, y);
  }
  if (a.surname_tokens.size() != b.surname_tokens.size()) return false;
  if (!given_positional_match(a, b)) return false;
  std::size_t edits = 0;
  for (std::size_t i = 0; i < a.surname_tokens.size(); ++i) {
    if (a.surname_tokens[i] == b.surname_tokens[i]) continue;
    if (!edit_distance_one(a.surname_tokens[i], b.surname_tokens[i])) return false;
    ++edits;
  }
  return edits == 1;
}

bool permuted_match(const ParsedName& a, const ParsedName& b) {
  const auto ta = all_tokens(a);
  const auto tb = all_tokens(b);
  if (ta.size() > kMaxPermutedTokens || tb.size() > kMaxPermutedTokens) {
    return false;
  }
  if (ta.size() == tb.size()) {
    std::vector<std::size_t> order(tb.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < ta.size() && ok; ++i) {
        const auto& x = ta[i];
        const auto& y = tb[order[i]];
        if (x.surname || y.surname) {
          ok = x.text == y.text;
        } else {
          ok = token_match(x.text, y.text) != TokenMatch::kNone;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  // Compound tokens split or joined in a different order.
  std::string ca = concat_in_order(ta);
  std::string cb = concat_in_order(tb);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  return concatenation_permutes(ta, tb) || concatenation_permutes(tb, ta);
}

std::optional<int> fuzzy_case(const ParsedName& a, const ParsedName& b,
                              const NicknameTable& table,
                              const OriginList& origins) {
  if (identical_names(a, b) || equal_token_match(a, b) || subset_match(a, b)) {
    return std::nullopt;
  }
  if (joined_token_match(a, b)) return 1;
  if (nickname_variant_match(a, b, table)) return 2;
  if (one_edit_variant_match(a, b, origins)) return 3;
  if (permuted_match(a, b)) return 4;
  return std::nullopt;
}

std::vector<CandidatePair> step1_homonym_pairs(const PreparedCorpus& pc) {
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pc.size(); ++i) groups[full_key(pc.name(i))].push_back(i);
  std::vector<CandidatePair> out;
  for (const auto& [key, members] : groups) {
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        if (pc.paper(members[p]) == pc.paper(members[q])) continue;
        out.push_back(make_pair(members[p], members[q], PairKind::kHomonym, 1));
      }
    }
  }
  sort_pairs(out);
  return out;
}

std::vector<CandidatePair> step2_equal_token_pairs(const PreparedCorpus& pc) {
  return positional_pairs(pc, 2);
}

std::vector<CandidatePair> step3_subset_pairs(const PreparedCorpus& pc) {
  return positional_pairs(pc, 3);
}

std::vector<CandidatePair> step4_fuzzy_pairs(const PreparedCorpus& pc,
                                             const NicknameTable& nicknames,
                                             const OriginList& origins) {
  // Each index groups mentions that could satisfy one of the fuzzy cases;
  // every surfaced pair is then verified by fuzzy_case().
  std::unordered_map<std::string, Bucket> joined;       // case 1
  std::unordered_map<std::string, Bucket> one_given;    // cases 2, 3 (given)
  std::unordered_map<std::string, Bucket> surname_edit; // case 3 (surname)
  std::unordered_map<std::string, Bucket> permuted;     // case 4
  std::unordered_map<std::string, std::vector<std::size_t>> surname_side;
  std::unordered_map<std::string, std::vector<std::size_t>> given_side;

  for (std::size_t i = 0; i < pc.size(); ++i) {
    const auto& n = pc.name(i);
    const std::string exact = full_key(n);
    const std::string sig = signature_key(n);

    joined[n.joined_surname() + kSep + join_tokens(n.given_texts())][exact]
        .push_back(i);

    if (!n.given_tokens.empty()) {
      const std::string base =
          surname_key(n) + '#' + std::to_string(n.given_tokens.size());
      for (std::size_t p = 0; p < n.given_tokens.size(); ++p) {
        std::string key = base + '@' + std::to_string(p) + kSep;
        for (std::size_t q = 0; q < n.given_tokens.size(); ++q) {
          if (q != p) key += first_letter(n.given_tokens[q].text);
          key += kSep;
        }
        one_given[key][exact].push_back(i);
      }
    }

    if (!in_origin_list(n.surname_tokens, origins)) {
      // Symmetric deletion neighbourhood of the joined surname: two strings
      // within one edit share a key.
      const std::string s = n.joined_surname();
      const std::string prefix =
          sig + '#' + std::to_string(n.surname_tokens.size()) + kSep;
      surname_edit[prefix + "=" + s][exact].push_back(i);
      for (std::size_t p = 0; p < s.size(); ++p) {
        std::string del = s;
        del.erase(p, 1);
        surname_edit[prefix + "=" + del][exact].push_back(i);
      }
    }

    auto tokens = all_tokens(n);
    if (tokens.size() <= kMaxPermutedTokens) {
      const std::string count = "#" + std::to_string(tokens.size());
      std::string letters = concat_in_order(tokens);
      std::sort(letters.begin(), letters.end());
      permuted["c" + letters][exact].push_back(i);
      // Bijections that keep surname tokens among surnames permute the
      // given tokens, which preserves the multiset of initials.
      auto surnames = n.surname_tokens;
      std::sort(surnames.begin(), surnames.end());
      std::string initials;
      for (const auto& t : n.given_tokens) initials += first_letter(t.text);
      std::sort(initials.begin(), initials.end());
      std::string skey = "s";
      for (const auto& s : surnames) skey += s + kSep;
      permuted[skey + initials + count][exact].push_back(i);
      // A surname token that reappears as a given token of the other name.
      for (const auto& t : n.surname_tokens) surname_side[t + count].push_back(i);
      for (const auto& t : n.given_tokens) {
        if (!t.is_initial) given_side[t.text + count].push_back(i);
      }
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<CandidatePair> out;
  auto consider = [&](std::size_t x, std::size_t y) {
    if (pc.paper(x) == pc.paper(y)) return;
    const auto key = std::minmax(x, y);
    if (!seen.insert(key).second) return;
    if (auto c = fuzzy_case(pc.name(x), pc.name(y), nicknames, origins)) {
      out.push_back(make_pair(x, y, PairKind::kSynonym, 4, *c));
    }
  };
  for_cross_group_pairs(joined, consider);
  for_cross_group_pairs(one_given, consider);
  for_cross_group_pairs(surname_edit, consider);
  for_cross_group_pairs(permuted, consider);
  for (const auto& [token, xs] : surname_side) {
    auto it = given_side.find(token);
    if (it == given_side.end()) continue;
    for (auto x : xs) {
      for (auto y : it->second) {
        if (x != y) consider(x, y);
      }
    }
  }
  sort_pairs(out);
  return out;
}

std::vector<CandidatePair> candidate_pairs(const PreparedCorpus& pc,
                                           const NicknameTable& nicknames,
                                           const OriginList& origins) {
  auto out = step1_homonym_pairs(pc);
  for (auto* step : {&step2_equal_token_pairs, &step3_subset_pairs}) {
    auto more = (*step)(pc);
    out.insert(out.end(), more.begin(), more.end());
  }
  auto fuzzy = step4_fuzzy_pairs(pc, nicknames, origins);
  out.insert(out.end(), fuzzy.begin(), fuzzy.end());
  sort_pairs(out);
  return out;
}

double coauthor_similarity(const PreparedCorpus& pc, std::size_t a,
                           std::size_t b) {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (auto x : pc.byline(pc.paper(a))) {
    if (x != a) left.push_back(x);
  }
  for (auto y : pc.byline(pc.paper(b))) {
    if (y != b) right.push_back(y);
  }
  std::vector<bool> used(right.size(), false);
  std::vector<bool> matched(left.size(), false);
  std::size_t full = 0;
  std::size_t initialized = 0;

  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto& x = pc.name(left[i]);
    if (!x.has_full_given()) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      const auto& y = pc.name(right[j]);
      if (!used[j] && y.has_full_given() && identical_names(x, y)) {
        used[j] = matched[i] = true;
        ++full;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (matched[i]) continue;
    const auto& x = pc.name(left[i]);
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      const auto& y = pc.name(right[j]);
      if (x.has_full_given() && y.has_full_given()) continue;
      if (x.surname_tokens == y.surname_tokens &&
          initial_signature(x) == initial_signature(y)) {
        used[j] = matched[i] = true;
        ++initialized;
        break;
      }
    }
  }
  return static_cast<double>(full) * kFullCoauthorMatch +
         static_cast<double>(initialized) * kInitializedCoauthorMatch;
}

double affiliation_pair_similarity(std::string_view a, std::string_view b,
                                   std::span<const std::string> stoplist) {
  const auto wa = content_words(a, stoplist);
  const auto wb = content_words(b, stoplist);
  double score = 0.0;
  const std::size_t shorter = std::min(wa.size(), wb.size());
  if (shorter > 0) {
    std::vector<std::string> shared;
    std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(),
                          std::back_inserter(shared));
    score = static_cast<double>(shared.size()) / static_cast<double>(shorter);
  }
  auto za = digit_runs(a, kZipCodeMinDigits);
  auto zb = digit_runs(b, kZipCodeMinDigits);
  std::sort(za.begin(), za.end());
  std::sort(zb.begin(), zb.end());
  std::vector<std::string> shared_zip;
  std::set_intersection(za.begin(), za.end(), zb.begin(), zb.end(),
                        std::back_inserter(shared_zip));
  if (!shared_zip.empty()) score += kZipCodeBonus;
  return score;
}

double affiliation_similarity(const AuthorMention& a, const AuthorMention& b,
                              std::span<const std::string> stoplist) {
  double best = 0.0;
  for (const auto& x : a.affiliations) {
    for (const auto& y : b.affiliations) {
      best = std::max(best, affiliation_pair_similarity(x, y, stoplist));
    }
  }
  return best;
}

int email_similarity(const AuthorMention& a, const AuthorMention& b) {
  if (!a.email || !b.email) return 0;
  const auto la = local_part(*a.email);
  const auto lb = local_part(*b.email);
  return !la.empty() && la == lb ? 1 : 0;
}

SimilarityProfile score_pair(const PreparedCorpus& pc, std::size_t a,
                             std::size_t b) {
  SimilarityProfile p;
  p.coauthor_score = coauthor_similarity(pc, a, b);
  p.affiliation_score = affiliation_similarity(
      pc.mention(a), pc.mention(b), pc.corpus().affiliation_stoplist());
  p.email_score = email_similarity(pc.mention(a), pc.mention(b));
  return p;
}

Decision decide(const SimilarityProfile& profile, PairKind kind) {
  Decision d;
  d.threshold_used =
      kind == PairKind::kHomonym ? kHomonymThreshold : kSynonymThreshold;
  const double total = profile.total();
  if (total > d.threshold_used + kEpsilon) {
    d.outcome = Outcome::kMatch;
  } else if (total >= kReviewFloor - kEpsilon) {
    d.outcome = Outcome::kReview;
  } else {
    d.outcome = Outcome::kNonMatch;
  }
  return d;
}

ConstrainedMergeResult constrained_merge(
    std::size_t n, const std::vector<MergeCandidate>& matches,
    std::span<const std::pair<std::size_t, std::size_t>> cannot_links) {
  std::vector<std::size_t> order(matches.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& p = matches[x];
    const auto& q = matches[y];
    if (p.score != q.score) return p.score > q.score;
    return std::tie(p.id_a, p.id_b) < std::tie(q.id_a, q.id_b);
  });

  // partners[root]: far ends of the cannot-links touching the root's cluster.
  std::vector<std::vector<std::size_t>> partners(n);
  for (const auto& [u, v] : cannot_links) {
    partners[u].push_back(v);
    partners[v].push_back(u);
  }

  UnionFind uf(n);
  ConstrainedMergeResult result;
  for (auto idx : order) {
    std::size_t ra = uf.find(matches[idx].a);
    std::size_t rb = uf.find(matches[idx].b);
    if (ra == rb) {
      result.applied.push_back(idx);
      continue;
    }
    if (partners[ra].size() > partners[rb].size()) std::swap(ra, rb);
    const bool violates =
        std::any_of(partners[ra].begin(), partners[ra].end(),
                    [&](std::size_t p) { return uf.find(p) == rb; });
    if (violates) {
      result.blocked.push_back(idx);
      continue;
    }
    const std::size_t root = uf.unite(ra, rb);
    const std::size_t other = root == ra ? rb : ra;
    auto& dst = partners[root];
    auto& src = partners[other];
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
    src.shrink_to_fit();
    result.applied.push_back(idx);
  }
  result.labels = uf.labels();
  return result;
}

HeuristicResult cluster(const Corpus& corpus, const NicknameTable& nicknames,
                        const OriginList& origins) {
  const PreparedCorpus pc(corpus);
  HeuristicResult result;
  const auto candidates = candidate_pairs(pc, nicknames, origins);
  result.scored.reserve(candidates.size());
  for (const auto& c : candidates) {
    ScoredPair s{c, score_pair(pc, c.a, c.b), {}};
    s.decision = decide(s.profile, c.kind);
    result.scored.push_back(s);
  }

  std::vector<MergeCandidate> matches;
  std::vector<std::size_t> match_source;
  for (std::size_t i = 0; i < result.scored.size(); ++i) {
    const auto& s = result.scored[i];
    switch (s.decision.outcome) {
      case Outcome::kMatch: {
        auto id_a = pc.id(s.pair.a);
        auto id_b = pc.id(s.pair.b);
        if (id_b < id_a) std::swap(id_a, id_b);
        matches.push_back({s.pair.a, s.pair.b, s.profile.total(),
                           std::move(id_a), std::move(id_b)});
        match_source.push_back(i);
        break;
      }
      case Outcome::kReview:
        result.review_pairs.push_back(s);
        [[fallthrough]];
      case Outcome::kNonMatch:
        if (s.pair.kind == PairKind::kHomonym) {
          result.cannot_links.emplace_back(s.pair.a, s.pair.b);
        }
        break;
    }
  }

  const auto merged = constrained_merge(pc.size(), matches, result.cannot_links);
  for (auto idx : merged.blocked) {
    result.blocked_merges.push_back(result.scored[match_source[idx]]);
  }
  result.clustering = Clustering::from_labels(corpus, merged.labels);
  return result;
}

std::string serialize_pairs(const Corpus& corpus,
                            std::span<const ScoredPair> pairs) {
  std::string out;
  char score[32];
  for (const auto& s : pairs) {
    std::snprintf(score, sizeof score, "%.4f", s.profile.total());
    out += corpus.mention(s.pair.a).mention_id;
    out += '\t';
    out += corpus.mention(s.pair.b).mention_id;
    out += '\t';
    out += to_string(s.pair.kind);
    out += '\t';
    out += score;
    out += '\n';
  }
  return out;
}

}  // namespace namedis
