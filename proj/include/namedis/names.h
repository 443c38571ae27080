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

// Name normalization and the token-level comparisons used by both the
// initial-based partitioners and the similarity-based disambiguator.

#ifndef NAMEDIS_NAMES_H_
#define NAMEDIS_NAMES_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namedis {

struct GivenToken {
  std::string text;
  std::size_t position = 0;
  bool is_initial = false;  // exactly one character

  bool operator==(const GivenToken&) const = default;
};

struct ParsedName {
  std::vector<std::string> surname_tokens;
  std::vector<GivenToken> given_tokens;

  // Surname tokens concatenated without separators.
  std::string joined_surname() const;
  // All given token texts in order.
  std::vector<std::string> given_texts() const;
  // True when at least one given token exists and none is an initial.
  bool has_full_given() const;

  bool operator==(const ParsedName&) const = default;
};

// Deletes every non-alphabetic character except whitespace, lowercases ASCII
// letters, and splits on whitespace. Bytes of multi-byte UTF-8 sequences are
// treated as letters and kept as-is. Throws DataError when the surname is
// empty after normalization.
ParsedName parse_name(std::string_view surname_raw, std::string_view given_raw);

// Normalizes a single free-form token list (same deletion and folding rules
// as parse_name) without the non-empty requirement.
std::vector<std::string> normalize_tokens(std::string_view raw);

// First code point of a token, as a UTF-8 substring. Empty for empty input.
std::string_view first_letter(std::string_view token);

// Number of code points in a UTF-8 token.
std::size_t letter_count(std::string_view token);

// First letters of the given tokens, in order.
std::vector<std::string> initial_signature(const ParsedName& name);

enum class TokenMatch { kFull, kInitialized, kNone };

// Positional comparison of two given-name tokens. Surname tokens must be
// compared for equality only; callers enforce that.
TokenMatch token_match(std::string_view a, std::string_view b);

// Symmetric nickname <-> full first name relation.
class NicknameTable {
 public:
  NicknameTable() = default;

  void add(std::string_view nickname, std::string_view full_name);
  bool linked(std::string_view a, std::string_view b) const;
  using NameSet = std::set<std::string, std::less<>>;

  NameSet full_names_for(std::string_view nickname) const;
  NameSet nicknames_for(std::string_view full_name) const;
  std::size_t size() const { return pair_count_; }

  // Two-column TSV "nickname<TAB>fullname"; blank lines and lines starting
  // with '#' are skipped.
  static NicknameTable load(const std::filesystem::path& path);
  static NicknameTable parse(std::string_view tsv);
  // Table bundled with the library.
  static const NicknameTable& bundled();

 private:
  std::map<std::string, NameSet, std::less<>> to_full_;
  std::map<std::string, NameSet, std::less<>> to_nick_;
  std::size_t pair_count_ = 0;
};

// True iff the tokens are linked in the table, or one is a prefix of the
// other and the shorter has at least two letters.
bool nickname_match(std::string_view a, std::string_view b,
                    const NicknameTable& table);

// True iff the Levenshtein distance over code points is exactly one.
bool edit_distance_one(std::string_view a, std::string_view b);

// Case-folded set of surnames that mark a high-ambiguity origin group.
class OriginList {
 public:
  OriginList() = default;
  explicit OriginList(std::span<const std::string> surnames);

  void add(std::string_view surname);
  bool contains(std::string_view normalized_surname) const;
  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }
  const std::set<std::string, std::less<>>& names() const { return names_; }

  // One surname per line; blank lines skipped.
  static OriginList load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::set<std::string, std::less<>> names_;
};

// True iff any surname token, or the joined surname, is in the list.
bool in_origin_list(std::span<const std::string> surname_tokens,
                    const OriginList& list);

}  // namespace namedis

#endif  // NAMEDIS_NAMES_H_
