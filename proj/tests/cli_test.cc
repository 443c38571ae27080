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


// Drives the namedis executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "namedis/corpus.h"

namespace namedis {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("namedis_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(NAMEDIS_CLI) + " " + args + " >" + path("stdout") +
                            " 2>" + path("stderr");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int gen(const std::string& stem, const std::string& extra = "") const {
    return run("gen --papers 500 --authors 800 --seed 7 -o " + path(stem + ".jsonl") +
               " --truth " + path(stem + ".truth.tsv") + " --origins " +
               path(stem + ".origins.txt") + " " + extra);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(gen("a"), 0);
  ASSERT_EQ(gen("b"), 0);
  for (const char* ext : {".jsonl", ".truth.tsv", ".origins.txt"}) {
    EXPECT_FALSE(read(std::string("a") + ext).empty());
    EXPECT_EQ(read(std::string("a") + ext), read(std::string("b") + ext)) << ext;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("gen --truth " + path("t") + " --origins " + path("o")), 1);
  EXPECT_NE(read("stderr").find("usage error"), std::string::npos);
  EXPECT_EQ(gen("c", "--collision-share 1.2"), 1);
  ASSERT_EQ(gen("a"), 0);
  EXPECT_EQ(run("run --method xd " + path("a.jsonl") + " -o " + path("x.tsv")), 1);
  EXPECT_EQ(run("frobnicate"), 1);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run("run --method fd " + path("missing.jsonl") + " -o " + path("x.tsv")), 2);
  EXPECT_NE(read("stderr").find("namedis: error:"), std::string::npos);
  {
    std::ofstream(path("t.tsv")) << "m1\tc1\nm2\tc1\n";
    std::ofstream(path("p.tsv")) << "m1\tc1\nm3\tc1\n";
  }
  EXPECT_EQ(run("eval --truth " + path("t.tsv") + " --pred " + path("p.tsv") + " -o " +
                path("r.json")),
            2);
  EXPECT_EQ(gen("c", "--team-min 5 --team-max 4"), 2);
}

TEST_F(CliTest, RunFdOnRenearFixture) {
  const Corpus c = testing::make_corpus({{{"Renear", "A. H."}, {"Xa", "X."}},
                                         {{"Renear", "A. C."}, {"Xb", "X."}},
                                         {{"Renear", "A."}, {"Xc", "X."}},
                                         {{"Renear", "B."}, {"Xd", "X."}}});
  std::ofstream(path("r.jsonl")) << serialize_corpus(c);
  ASSERT_EQ(run("run --method fd " + path("r.jsonl") + " -o " + path("fd.tsv")), 0);
  const Clustering k = parse_labels(read("fd.tsv"));
  EXPECT_EQ(k.cluster_of("p0:0"), k.cluster_of("p1:0"));
  EXPECT_EQ(k.cluster_of("p0:0"), k.cluster_of("p2:0"));
  EXPECT_NE(k.cluster_of("p0:0"), k.cluster_of("p3:0"));
}

TEST_F(CliTest, HeuristicWritesSideFiles) {
  ASSERT_EQ(gen("a"), 0);
  ASSERT_EQ(run("run --method heuristic " + path("a.jsonl") + " -o " + path("h.tsv") +
                " --review " + path("review.tsv") + " --blocked " + path("blocked.tsv") +
                " --origins " + path("a.origins.txt")),
            0);
  EXPECT_TRUE(fs::exists(path("review.tsv")));
  EXPECT_TRUE(fs::exists(path("blocked.tsv")));
  ASSERT_EQ(run("eval --truth " + path("a.truth.tsv") + " --pred " + path("h.tsv") + " -o " +
                path("e.json")),
            0);
  const auto j = nlohmann::json::parse(read("e.json"));
  EXPECT_GT(j["k"].get<double>(), 0.8);
}

TEST_F(CliTest, EvalFourMentionFixture) {
  {
    std::ofstream(path("t.tsv")) << "a1\tr1\na2\tr1\na3\tr2\na4\tr2\n";
    std::ofstream(path("p.tsv")) << "a1\tq1\na2\tq1\na3\tq1\na4\tq2\n";
  }
  ASSERT_EQ(run("eval --truth " + path("t.tsv") + " --pred " + path("p.tsv") + " -o " +
                path("r.json")),
            0);
  const auto j = nlohmann::json::parse(read("r.json"));
  EXPECT_NEAR(j["k"].get<double>(), 0.7071, 1e-4);
  EXPECT_EQ(j["cf1"].get<double>(), 0.0);
  EXPECT_EQ(j["m_rate"].get<double>(), 1.0);
}

TEST_F(CliTest, StatsWithDistributions) {
  const Corpus c = testing::make_corpus({{{"X", "A."}, {"Y", "B."}, {"Z", "C."}}});
  std::ofstream(path("t.jsonl")) << serialize_corpus(c);
  std::ofstream(path("t.tsv")) << "p0:0\ta\np0:1\tb\np0:2\tc\n";
  ASSERT_EQ(run("stats --clusters " + path("t.tsv") + " " + path("t.jsonl") + " -o " +
                path("s.json") + " --dist " + path("curve")),
            0);
  const auto j = nlohmann::json::parse(read("s.json"));
  EXPECT_EQ(j["density"].get<double>(), 1.0);
  EXPECT_EQ(read("curve.productivity.csv"), "value,count,cum_fraction\n1,3,1\n");
  EXPECT_EQ(read("curve.degree.csv"), "value,count,cum_fraction\n2,3,1\n");
}

TEST_F(CliTest, CompareWritesReportAndCurves) {
  ASSERT_EQ(gen("a"), 0);
  ASSERT_EQ(run("compare " + path("a.jsonl") + " --truth " + path("a.truth.tsv") +
                " --origins " + path("a.origins.txt") + " -o " + path("cmp.json") +
                " --curves " + path("curves")),
            0);
  const auto j = nlohmann::json::parse(read("cmp.json"));
  const auto fd = j["methods"]["fd"]["unique_authors"].get<std::size_t>();
  const auto hd = j["methods"]["hd"]["unique_authors"].get<std::size_t>();
  const auto ad = j["methods"]["ad"]["unique_authors"].get<std::size_t>();
  EXPECT_LT(fd, hd);
  EXPECT_LT(hd, ad);
  EXPECT_LT(ad, j["truth"]["unique_authors"].get<std::size_t>());
  EXPECT_GT(j["methods"]["fd"]["stats_change_pct"]["density"].get<double>(), 0.0);
  EXPECT_TRUE(fs::exists(path("curves/fd_degree.csv")));
  EXPECT_TRUE(fs::exists(path("curves/truth_productivity.csv")));
}

}  // namespace
}  // namespace namedis
