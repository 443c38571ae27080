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
#include <random>
#include <string>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "namedis/synthetic.h"

namespace namedis {
namespace {

using ::namedis::testing::make_corpus;
using ::namedis::testing::Name;

// Each name on its own two-author paper next to a unique filler.
Corpus names_corpus(const std::vector<Name>& names) {
  std::vector<std::vector<Name>> papers;
  for (std::size_t i = 0; i < names.size(); ++i) {
    papers.push_back({names[i], {"Filler" + std::string(i + 1, 'x'), "Q."}});
  }
  return make_corpus(papers);
}

bool together(const Clustering& c, std::size_t i, std::size_t j) {
  return c.cluster_of("p" + std::to_string(i) + ":0") ==
         c.cluster_of("p" + std::to_string(j) + ":0");
}

TEST(FdPartitionTest, FirstInitialOnly) {
  const Corpus c = names_corpus({{"Renear", "A. H."}, {"Renear", "A. C."},
                                 {"Renear", "A."}, {"Renear", "B."}});
  const Clustering fd = fd_partition(c);
  EXPECT_TRUE(together(fd, 0, 1));
  EXPECT_TRUE(together(fd, 0, 2));
  EXPECT_FALSE(together(fd, 0, 3));
}

TEST(AdPartitionTest, FullSignature) {
  const Corpus c = names_corpus({{"Renear", "A. H."}, {"Renear", "A."},
                                 {"Renear", "A. C."}, {"Renear", "Allen Henry"}});
  const Clustering ad = ad_partition(c);
  EXPECT_FALSE(together(ad, 0, 1));
  EXPECT_FALSE(together(ad, 0, 2));
  EXPECT_TRUE(together(ad, 0, 3));
}

TEST(HdPartitionTest, AmbiguousPrefixStaysApart) {
  const Corpus c = names_corpus({{"Renear", "A."}, {"Renear", "A. H."}, {"Renear", "A. C."}});
  const Clustering hd = hd_partition(c);
  EXPECT_EQ(hd.cluster_count(), 3u + 3u);  // three Renears plus three fillers
  EXPECT_FALSE(together(hd, 0, 1));
  EXPECT_FALSE(together(hd, 0, 2));
  EXPECT_FALSE(together(hd, 1, 2));
}

TEST(HdPartitionTest, UniqueExtensionMerges) {
  const Corpus c = names_corpus({{"Renear", "A."}, {"Renear", "A. H."}, {"Renear", "Allen H."}});
  const Clustering hd = hd_partition(c);
  EXPECT_TRUE(together(hd, 0, 1));
  EXPECT_TRUE(together(hd, 1, 2));
}

TEST(HdPartitionTest, SingletonBlock) {
  const Corpus c = names_corpus({{"Renear", "A. H."}});
  EXPECT_EQ(hd_partition(c).cluster_count(), 2u);
}

TEST(HdPartitionTest, ThreeLevelPrefixes) {
  // [a] has two distinct extensions, [a,h] has exactly one.
  const Corpus c = names_corpus({{"Renear", "A."}, {"Renear", "A. H."}, {"Renear", "A. H. C."}});
  const Clustering hd = hd_partition(c);
  EXPECT_FALSE(together(hd, 0, 1));
  EXPECT_TRUE(together(hd, 1, 2));
}

TEST(IbdTest, EmptyGivenNameIsSingleton) {
  const Corpus c = names_corpus({{"Park", ""}, {"Park", ""}, {"Park", "J."}});
  for (const auto& p : {fd_partition(c), ad_partition(c), hd_partition(c)}) {
    EXPECT_FALSE(together(p, 0, 1));
    EXPECT_FALSE(together(p, 0, 2));
  }
}

TEST(IbdTest, SurnameComparedAfterNormalization) {
  const Corpus c = names_corpus({{"O'Brien", "M."}, {"OBrien", "M. J."}, {"O Brien", "M."}});
  const Clustering fd = fd_partition(c);
  EXPECT_TRUE(together(fd, 0, 1));
  EXPECT_TRUE(together(fd, 0, 2));
}

TEST(IbdTest, RefinementChainOnSyntheticCorpora) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SyntheticSpec spec;
    spec.n_authors = 400;
    spec.n_papers = 300;
    spec.collision_pool_share = 0.3;
    spec.seed = seed;
    const auto g = generate_synthetic(spec);
    const Clustering fd = fd_partition(g.corpus);
    const Clustering hd = hd_partition(g.corpus);
    const Clustering ad = ad_partition(g.corpus);
    EXPECT_TRUE(refines(ad, hd)) << seed;
    EXPECT_TRUE(refines(hd, fd)) << seed;
    EXPECT_LE(fd.cluster_count(), hd.cluster_count());
    EXPECT_LE(hd.cluster_count(), ad.cluster_count());
    EXPECT_EQ(fd.size(), g.corpus.mention_count());
  }
}

TEST(IbdTest, InvariantToPaperOrder) {
  SyntheticSpec spec;
  spec.n_authors = 300;
  spec.n_papers = 200;
  spec.seed = 5;
  const auto g = generate_synthetic(spec);
  auto papers = g.corpus.papers();
  std::mt19937_64 rng(9);
  std::shuffle(papers.begin(), papers.end(), rng);
  const Corpus shuffled(papers);
  EXPECT_EQ(fd_partition(shuffled), fd_partition(g.corpus));
  EXPECT_EQ(ad_partition(shuffled), ad_partition(g.corpus));
  EXPECT_EQ(hd_partition(shuffled), hd_partition(g.corpus));
}

}  // namespace
}  // namespace namedis
