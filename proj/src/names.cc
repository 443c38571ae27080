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

#include "namedis/names.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "namedis/errors.h"

namespace namedis {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// ASCII letters and any byte of a multi-byte UTF-8 sequence.
bool is_letter_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;  // stray continuation byte
}

std::vector<char32_t> code_points(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const auto lead = static_cast<unsigned char>(s[i]);
    std::size_t len = std::min(sequence_length(lead), s.size() - i);
    char32_t cp = 0;
    for (std::size_t k = 0; k < len; ++k) {
      cp = (cp << 8) | static_cast<unsigned char>(s[i + k]);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_space(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (is_letter_byte(c)) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

ParsedName parse_name(std::string_view surname_raw,
                      std::string_view given_raw) {
  ParsedName name;
  name.surname_tokens = normalize_tokens(surname_raw);
  if (name.surname_tokens.empty()) {
    throw DataError("surname is empty after normalization: '" +
                    std::string(surname_raw) + "'");
  }
  auto given = normalize_tokens(given_raw);
  name.given_tokens.reserve(given.size());
  for (std::size_t i = 0; i < given.size(); ++i) {
    const bool initial = letter_count(given[i]) == 1;
    name.given_tokens.push_back({std::move(given[i]), i, initial});
  }
  return name;
}

std::string ParsedName::joined_surname() const { return join(surname_tokens); }

std::vector<std::string> ParsedName::given_texts() const {
  std::vector<std::string> out;
  out.reserve(given_tokens.size());
  for (const auto& t : given_tokens) out.push_back(t.text);
  return out;
}

bool ParsedName::has_full_given() const {
  return !given_tokens.empty() &&
         std::none_of(given_tokens.begin(), given_tokens.end(),
                      [](const GivenToken& t) { return t.is_initial; });
}

std::string_view first_letter(std::string_view token) {
  if (token.empty()) return token;
  const auto len = std::min(
      sequence_length(static_cast<unsigned char>(token.front())), token.size());
  return token.substr(0, len);
}

std::size_t letter_count(std::string_view token) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < token.size(); ++n) {
    i += sequence_length(static_cast<unsigned char>(token[i]));
  }
  return n;
}

std::vector<std::string> initial_signature(const ParsedName& name) {
  std::vector<std::string> sig;
  sig.reserve(name.given_tokens.size());
  for (const auto& t : name.given_tokens) {
    sig.emplace_back(first_letter(t.text));
  }
  return sig;
}

TokenMatch token_match(std::string_view a, std::string_view b) {
  if (a == b) return TokenMatch::kFull;
  const bool a_single = letter_count(a) == 1;
  const bool b_single = letter_count(b) == 1;
  if (a_single == b_single) return TokenMatch::kNone;
  const std::string_view initial = a_single ? a : b;
  const std::string_view full = a_single ? b : a;
  return first_letter(full) == initial ? TokenMatch::kInitialized
                                       : TokenMatch::kNone;
}

void NicknameTable::add(std::string_view nickname, std::string_view full_name) {
  const std::string nick = join(normalize_tokens(nickname));
  const std::string full = join(normalize_tokens(full_name));
  if (nick.empty() || full.empty() || nick == full) return;
  if (to_full_[nick].insert(full).second) ++pair_count_;
  to_nick_[full].insert(nick);
}

bool NicknameTable::linked(std::string_view a, std::string_view b) const {
  if (auto it = to_full_.find(a); it != to_full_.end() && it->second.contains(b)) {
    return true;
  }
  if (auto it = to_full_.find(b); it != to_full_.end() && it->second.contains(a)) {
    return true;
  }
  return false;
}

NicknameTable::NameSet NicknameTable::full_names_for(
    std::string_view nickname) const {
  auto it = to_full_.find(nickname);
  return it == to_full_.end() ? NameSet{} : it->second;
}

NicknameTable::NameSet NicknameTable::nicknames_for(
    std::string_view full_name) const {
  auto it = to_nick_.find(full_name);
  return it == to_nick_.end() ? NameSet{} : it->second;
}

NicknameTable NicknameTable::parse(std::string_view tsv) {
  NicknameTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError("nickname table line " + std::to_string(line_no) +
                      ": expected 'nickname<TAB>fullname'");
    }
    table.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return table;
}

NicknameTable NicknameTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open nickname table: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool nickname_match(std::string_view a, std::string_view b,
                    const NicknameTable& table) {
  if (table.linked(a, b)) return true;
  const std::string_view shorter = a.size() <= b.size() ? a : b;
  const std::string_view longer = a.size() <= b.size() ? b : a;
  return letter_count(shorter) >= 2 && longer.starts_with(shorter);
}

bool edit_distance_one(std::string_view a, std::string_view b) {
  const auto x = code_points(a);
  const auto y = code_points(b);
  if (x.size() == y.size()) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < x.size() && diff < 2; ++i) {
      diff += x[i] != y[i];
    }
    return diff == 1;
  }
  const auto& longer = x.size() > y.size() ? x : y;
  const auto& shorter = x.size() > y.size() ? y : x;
  if (longer.size() != shorter.size() + 1) return false;
  std::size_t i = 0;
  while (i < shorter.size() && shorter[i] == longer[i]) ++i;
  return std::equal(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                    shorter.end(),
                    longer.begin() + static_cast<std::ptrdiff_t>(i) + 1);
}

OriginList::OriginList(std::span<const std::string> surnames) {
  for (const auto& s : surnames) add(s);
}

void OriginList::add(std::string_view surname) {
  std::string key = join(normalize_tokens(surname));
  if (!key.empty()) names_.insert(std::move(key));
}

bool OriginList::contains(std::string_view normalized_surname) const {
  return names_.find(normalized_surname) != names_.end();
}

OriginList OriginList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open origin list: " + path.string());
  OriginList list;
  std::string line;
  while (std::getline(in, line)) list.add(line);
  return list;
}

void OriginList::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write origin list: " + path.string());
  for (const auto& n : names_) out << n << '\n';
}

bool in_origin_list(std::span<const std::string> surname_tokens,
                    const OriginList& list) {
  if (list.empty() || surname_tokens.empty()) return false;
  std::string joined;
  for (const auto& t : surname_tokens) {
    if (list.contains(t)) return true;
    joined += t;
  }
  return list.contains(joined);
}

}  // namespace namedis
