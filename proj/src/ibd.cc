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

#include "namedis/ibd.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "namedis/names.h"
#include "namedis/union_find.h"

namespace namedis {
namespace {

struct InitialKey {
  std::string surname;
  std::vector<std::string> signature;  // empty: singleton mention
};

std::vector<InitialKey> initial_keys(const Corpus& corpus) {
  std::vector<InitialKey> keys;
  keys.reserve(corpus.mention_count());
  for (std::size_t i = 0; i < corpus.mention_count(); ++i) {
    const auto& m = corpus.mention(i);
    const ParsedName name = parse_name(m.surname_raw, m.given_raw);
    keys.push_back({name.joined_surname(), initial_signature(name)});
  }
  return keys;
}

// Groups mentions by a string key; mentions whose key is nullopt stay alone.
template <typename KeyFn>
Clustering partition_by(const Corpus& corpus, const std::vector<InitialKey>& keys,
                        KeyFn key_of) {
  std::map<std::string, std::size_t> label_of;
  std::vector<std::size_t> labels(keys.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].signature.empty()) {
      labels[i] = next++;
      continue;
    }
    auto [it, fresh] = label_of.emplace(key_of(keys[i]), next);
    if (fresh) ++next;
    labels[i] = it->second;
  }
  return Clustering::from_labels(corpus, labels);
}

std::string fd_key(const InitialKey& k) {
  return k.surname + '\x1f' + k.signature.front();
}

std::string ad_key(const InitialKey& k) {
  std::string key = k.surname;
  for (const auto& s : k.signature) {
    key += '\x1f';
    key += s;
  }
  return key;
}

bool extends(const std::vector<std::string>& longer,
             const std::vector<std::string>& prefix) {
  return longer.size() > prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), longer.begin());
}

}  // namespace

Clustering fd_partition(const Corpus& corpus) {
  return partition_by(corpus, initial_keys(corpus), fd_key);
}

Clustering ad_partition(const Corpus& corpus) {
  return partition_by(corpus, initial_keys(corpus), ad_key);
}

Clustering hd_partition(const Corpus& corpus) {
  const auto keys = initial_keys(corpus);

  // FD block -> distinct signature -> mentions carrying it.
  std::map<std::string,
           std::map<std::vector<std::string>, std::vector<std::size_t>>>
      blocks;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].signature.empty()) continue;
    blocks[fd_key(keys[i])][keys[i].signature].push_back(i);
  }

  UnionFind uf(keys.size());
  for (const auto& [block_key, signatures] : blocks) {
    for (const auto& [sig, members] : signatures) {
      for (std::size_t m = 1; m < members.size(); ++m) uf.unite(members[0], members[m]);
    }
    for (const auto& [sig, members] : signatures) {
      const std::vector<std::size_t>* only_extension = nullptr;
      std::size_t extension_count = 0;
      for (const auto& [other, other_members] : signatures) {
        if (extends(other, sig)) {
          ++extension_count;
          only_extension = &other_members;
        }
      }
      if (extension_count == 1) uf.unite(members[0], only_extension->front());
    }
  }
  return Clustering::from_labels(corpus, uf.labels());
}

}  // namespace namedis
