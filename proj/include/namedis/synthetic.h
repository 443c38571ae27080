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

// Seeded generator for bibliographic corpora with exact ground truth.
//
// Authors belong to small research groups. Each paper has a lead author
// drawn by activity weight and a team drawn mostly from the lead's group, so
// the coauthorship graph has many dense, weakly bridged communities. A share
// of the authors come from a small "collision" pool of surnames and given
// names with concentrated initials; their surnames form the emitted origin
// list.

#ifndef NAMEDIS_SYNTHETIC_H_
#define NAMEDIS_SYNTHETIC_H_

#include <cstdint>

#include "namedis/corpus.h"
#include "namedis/names.h"

namespace namedis {

struct SyntheticSpec {
  std::size_t n_authors = 1000;
  std::size_t n_papers = 800;

  // Team size is 2 + Geometric, truncated to [min_team, max_team]; the
  // untruncated mean is team_size_mean.
  double team_size_mean = 4.0;
  std::size_t min_team = kMinTeamSize;
  std::size_t max_team = kMaxTeamSize;

  std::size_t surname_pool_size = 6000;
  double surname_zipf_exponent = 0.7;

  double collision_pool_share = 0.2;
  std::size_t collision_surname_count = 12;

  double full_given_name_probability = 0.9;
  double email_coverage = 0.5;
  double affiliation_coverage = 0.95;
  double two_token_given_probability = 0.4;
  // Chance that a mention of an author with a middle name drops it.
  double middle_name_omission_probability = 0.05;

  // Mean research-group size and the chance a coauthor is drawn from
  // outside the lead author's group.
  double group_size_mean = 8.0;
  double cross_group_probability = 0.08;

  std::uint64_t seed = 1;

  // Throws DataError when a probability is outside [0, 1], a count is zero,
  // or the team-size bounds are infeasible.
  void validate() const;
};

struct SyntheticCorpus {
  Corpus corpus;
  Clustering truth;
  OriginList origins;
};

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

}  // namespace namedis

#endif  // NAMEDIS_SYNTHETIC_H_
