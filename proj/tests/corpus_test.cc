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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "namedis/errors.h"

namespace namedis {
namespace {

using ::namedis::testing::make_corpus;
using ::namedis::testing::Name;

std::string paper_line(const std::string& id, std::size_t authors) {
  std::string line = R"({"paper_id":")" + id + R"(","authors":[)";
  for (std::size_t i = 0; i < authors; ++i) {
    if (i) line += ",";
    line += R"({"surname":"S)" + std::string(1, static_cast<char>('a' + i % 26)) +
            R"(","given":"A."})";
  }
  return line + "]}\n";
}

std::string error_of(const std::string& jsonl) {
  try {
    parse_corpus(jsonl);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadCorpusTest, TwoAuthorPaper) {
  const Corpus c = parse_corpus(
      R"({"paper_id":"x1","year":2001,"venue":"J","authors":[)"
      R"({"surname":"Renear","given":"A. H.","affiliations":["SIS"],"email":"a@b.c"},)"
      R"({"surname":"Smith","given":"J.","given_full":"John"}]})");
  ASSERT_EQ(c.papers().size(), 1u);
  ASSERT_EQ(c.mention_count(), 2u);
  EXPECT_EQ(c.mention(0).mention_id, "x1:0");
  EXPECT_EQ(c.mention(1).mention_id, "x1:1");
  EXPECT_EQ(c.mention(1).given_full_raw, "John");
  EXPECT_EQ(c.papers()[0].year, 2001);
  EXPECT_EQ(c.find_mention("x1:1"), 1u);
  EXPECT_FALSE(c.find_mention("x1:2"));
}

TEST(LoadCorpusTest, DuplicatePaperIdNamesTheId) {
  const std::string err = error_of(paper_line("dup", 2) + paper_line("dup", 2));
  EXPECT_NE(err.find("'dup'"), std::string::npos) << err;
  EXPECT_NE(err.find("line 2"), std::string::npos) << err;
}

TEST(LoadCorpusTest, ErrorsReportLineAndField) {
  std::string err = error_of(paper_line("a", 2) + "{not json}\n");
  EXPECT_NE(err.find("line 2"), std::string::npos) << err;

  err = error_of(R"({"paper_id":"a","authors":[{"given":"A."}]})");
  EXPECT_NE(err.find("line 1"), std::string::npos) << err;
  EXPECT_NE(err.find("authors[0].surname"), std::string::npos) << err;

  err = error_of(R"({"paper_id":"a","year":"x","authors":[]})");
  EXPECT_NE(err.find("'year'"), std::string::npos) << err;

  err = error_of(R"({"paper_id":"a","authors":[{"surname":" - ","given":"A."}]})");
  EXPECT_NE(err.find("surname"), std::string::npos) << err;
}

TEST(LoadCorpusTest, SerializationRoundTrips) {
  const Corpus c = make_corpus(
      {{{"Renear", "A. H.", "Allen Henry", {"SIS, Springfield 62704"}, "ar@x.edu"},
        {"Park", "J.", std::nullopt, {}, std::nullopt}},
       {{"Brandt", "J.", "Nora", {"A", "B"}, std::nullopt}, {"Park", "J."}}});
  const Corpus back = parse_corpus(serialize_corpus(c));
  EXPECT_EQ(back.papers(), c.papers());
  EXPECT_EQ(serialize_corpus(back), serialize_corpus(c));
}

TEST(LoadCorpusTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "namedis_corpus_test.jsonl";
  const Corpus c = make_corpus({{{"A", "B."}, {"C", "D."}}});
  save_corpus(c, path);
  EXPECT_EQ(load_corpus(path).papers(), c.papers());
  std::filesystem::remove(path);
  EXPECT_THROW(load_corpus(path), DataError);
}

// Word counts by an independent tokenizer: maximal ASCII letter runs.
std::vector<std::string> stoplist_oracle(const std::vector<std::string>& affiliations) {
  std::map<std::string, int> counts;
  for (const auto& a : affiliations) {
    std::string w;
    for (char ch : a + " ") {
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        w += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      } else if (!w.empty()) {
        ++counts[w];
        w.clear();
      }
    }
  }
  std::vector<std::pair<std::string, int>> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size() && i < 20; ++i) out.push_back(v[i].first);
  return out;
}

TEST(StoplistTest, TwentyMostFrequentTiesLexicographic) {
  // 25 distinct words: w00..w24, where w_k appears (k % 7) + 1 times, so
  // many counts tie and the cut at 20 falls inside a tie group.
  std::vector<std::string> affiliations;
  for (int k = 24; k >= 0; --k) {
    for (int r = 0; r <= k % 7; ++r) {
      affiliations.push_back("Word" + std::string(1, static_cast<char>('a' + k)) +
                             " " + std::to_string(1000 + r));
    }
  }
  std::vector<Name> authors;
  for (const auto& a : affiliations) authors.push_back({"S", "A.", std::nullopt, {a}});
  const Corpus c = make_corpus({authors});
  const auto expected = stoplist_oracle(affiliations);
  ASSERT_EQ(expected.size(), 20u);
  EXPECT_EQ(c.affiliation_stoplist(), expected);
}

TEST(StoplistTest, FewerThanTwentyWords) {
  const Corpus c = make_corpus({{{"S", "A.", std::nullopt, {"Dept of Physics"}},
                                 {"T", "B.", std::nullopt, {"Dept of Chemistry"}}}});
  EXPECT_EQ(c.affiliation_stoplist(),
            (std::vector<std::string>{"dept", "of", "chemistry", "physics"}));
  EXPECT_TRUE(c.is_stopword("dept"));
  EXPECT_FALSE(c.is_stopword("biology"));
}

TEST(AffiliationWordsTest, DigitsAreNotWords) {
  EXPECT_EQ(affiliation_words("SIS, Univ. of Ohio, IL 62704"),
            (std::vector<std::string>{"sis", "univ", "of", "ohio", "il"}));
  EXPECT_EQ(digit_runs("IL 62704-123 x 2024", 4),
            (std::vector<std::string>{"62704", "2024"}));
}

TEST(FilterPapersTest, KeepsTwoToNinetyNineAuthors) {
  const Corpus c = parse_corpus(paper_line("one", 1) + paper_line("two", 2) +
                                paper_line("n99", 99) + paper_line("n100", 100));
  const Corpus f = filter_papers(c);
  ASSERT_EQ(f.papers().size(), 2u);
  EXPECT_EQ(f.papers()[0].paper_id, "two");
  EXPECT_EQ(f.papers()[1].paper_id, "n99");
  EXPECT_EQ(f.mention(2).mention_id, "n99:0");
  EXPECT_EQ(filter_papers(f).papers(), f.papers());
}

TEST(FilterPapersTest, TwoAuthorCorpusUnchanged) {
  const Corpus c = parse_corpus(paper_line("a", 2) + paper_line("b", 2));
  EXPECT_EQ(filter_papers(c).papers(), c.papers());
}

TEST(ClusteringTest, FromLabelsNamesClustersBySmallestMember) {
  const Corpus c = make_corpus({{{"A", "B."}, {"C", "D."}}, {{"A", "B."}, {"E", "F."}}});
  const Clustering k = Clustering::from_labels(c, {7, 3, 7, 9});
  EXPECT_EQ(k.cluster_of("p1:0"), "p0:0");
  EXPECT_EQ(k.cluster_of("p0:1"), "p0:1");
  EXPECT_EQ(k.cluster_count(), 3u);
  EXPECT_THROW(Clustering::from_labels(c, {1, 2}), DataError);
}

TEST(LabelsTest, RoundTrip) {
  const Clustering c = testing::clustering_of({0, 0, 1});
  EXPECT_EQ(parse_labels(serialize_labels(c)), c);
  const auto path = std::filesystem::temp_directory_path() / "namedis_labels_test.tsv";
  write_labels(c, path);
  EXPECT_EQ(read_labels(path), c);
  std::filesystem::remove(path);
}

TEST(LabelsTest, MissingMentionIsListed) {
  const Corpus c = make_corpus({{{"A", "B."}, {"C", "D."}}});
  const Clustering partial(Clustering::Assignment{{"p0:0", "x"}});
  try {
    partial.check_total(c);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("p0:1"), std::string::npos);
  }
  const Clustering foreign(
      Clustering::Assignment{{"p0:0", "x"}, {"p0:1", "x"}, {"zz:0", "y"}});
  EXPECT_THROW(foreign.check_total(c), DataError);
}

TEST(LabelsTest, DuplicateRowRejected) {
  try {
    parse_labels("a:0\tx\nb:0\ty\na:0\tz\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_labels("a:0 x\n"), DataError);
}

TEST(PartitionTest, SamePartitionAndRefines) {
  const auto a = testing::clustering_of({0, 0, 1, 2});
  const auto b = testing::clustering_of({5, 5, 3, 4});
  const auto coarse = testing::clustering_of({0, 0, 1, 1});
  EXPECT_TRUE(same_partition(a, b));
  EXPECT_TRUE(refines(a, coarse));
  EXPECT_FALSE(refines(coarse, a));
  EXPECT_FALSE(same_partition(a, coarse));
}

}  // namespace
}  // namespace namedis
