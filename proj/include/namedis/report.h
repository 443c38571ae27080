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

// Multi-method comparison against a reference clustering.

#ifndef NAMEDIS_REPORT_H_
#define NAMEDIS_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "namedis/corpus.h"
#include "namedis/heuristic.h"
#include "namedis/names.h"

namespace namedis {

// "fd", "ad", "hd" or "heuristic". Throws DataError for anything else.
Clustering run_method(std::string_view method, const Corpus& corpus,
                      const NicknameTable& nicknames,
                      const OriginList& origins);

bool is_known_method(std::string_view method);

// 100·(value − reference)/reference; nullopt when either side is undefined
// or the reference is zero.
std::optional<double> percent_change(std::optional<double> value,
                                     std::optional<double> reference);

struct CompareOptions {
  // Methods evaluated against the reference. "truth" evaluates the
  // reference against itself.
  std::vector<std::string> methods = {"fd", "ad", "hd"};
  const NicknameTable* nicknames = nullptr;  // bundled table when null
  std::optional<OriginList> origins;
};

struct ComparisonReport {
  nlohmann::ordered_json json;
  // File name -> CSV body, e.g. "fd_productivity.csv".
  std::map<std::string, std::string> curves;
};

// The corpus is used as given; callers filter it first.
ComparisonReport compare_methods(const Corpus& corpus, const Clustering& truth,
                                 const CompareOptions& options);

}  // namespace namedis

#endif  // NAMEDIS_REPORT_H_
