// Copyright 2026 The Authors.
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

#include "revkit/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "revkit/error.h"
#include "revkit/round_robin.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace revkit {
namespace {

using testing::FromOneBased;
using testing::InstA;
using testing::InstB;

std::vector<double> Scores(std::initializer_list<double> s) { return s; }

TEST(UswMeanTest, Examples) {
  const Allocation alloc = FromOneBased({{4, 3}, {1, 6}, {5, 2}});
  EXPECT_DOUBLE_EQ(UswMean(InstA(), alloc), 34.0 / 3.0);
  EXPECT_EQ(UswMean(InstA(), Allocation::Empty(3)), 0.0);
}

TEST(UswMeanTest, MatchesDirectSummation) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::RandomInstance(gen);
    const Allocation alloc = ReviewerRoundRobin(
        inst, testing::RandomFullOrder(gen, inst.num_papers()));
    ASSERT_EQ(UswMean(inst, alloc),
              testing::OracleUsw(inst, alloc.bundles) / inst.num_papers());
  }
}

TEST(NswTest, Examples) {
  NashWelfare w = Nsw(Scores({2, 8}));
  EXPECT_DOUBLE_EQ(w.nsw, 4.0);
  EXPECT_DOUBLE_EQ(w.nsw_positive, 4.0);
  EXPECT_EQ(w.zero_score_count, 0);

  w = Nsw(Scores({0, 8}));
  EXPECT_EQ(w.nsw, 0.0);
  EXPECT_DOUBLE_EQ(w.nsw_positive, 8.0);
  EXPECT_EQ(w.zero_score_count, 1);

  w = Nsw(Scores({3.5, 3.5, 3.5}));
  EXPECT_DOUBLE_EQ(w.nsw, 3.5);
  EXPECT_DOUBLE_EQ(w.nsw_positive, 3.5);

  w = Nsw(Scores({0, 0}));
  EXPECT_EQ(w.nsw, 0.0);
  EXPECT_EQ(w.nsw_positive, 0.0);
  EXPECT_EQ(w.zero_score_count, 2);
}

TEST(NswTest, LogSpaceMatchesDirectProduct) {
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> score(0.1, 30.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 20)(gen);
    std::vector<double> s(n);
    for (double& x : s) x = score(gen);
    const NashWelfare w = Nsw(s);
    ASSERT_NEAR(w.nsw, testing::OracleNsw(s), 1e-9 * testing::OracleNsw(s));
    // AM-GM.
    double mean = 0.0;
    for (double x : s) mean += x / n;
    ASSERT_LE(w.nsw_positive, mean * (1 + 1e-12));
  }
}

TEST(GiniTest, Examples) {
  EXPECT_EQ(Gini(Scores({4, 4, 4, 4})), 0.0);
  EXPECT_DOUBLE_EQ(Gini(Scores({0, 7})), 0.5);
  try {
    Gini(Scores({0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllZeroScores);
  }
}

TEST(GiniTest, MatchesDoubleLoopAndIsScaleInvariant) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> score(0.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(gen);
    std::vector<double> s(n);
    for (double& x : s) x = score(gen);
    const double g = Gini(s);
    ASSERT_NEAR(g, testing::OracleGini(s), 1e-12);
    ASSERT_GE(g, 0.0);
    ASSERT_LE(g, 1.0);
    std::vector<double> scaled = s;
    for (double& x : scaled) x *= 3.7;
    ASSERT_NEAR(Gini(scaled), g, 1e-12);
  }
}

TEST(EnvyTest, Examples) {
  const Allocation naive =
      FromOneBased({{1, 5, 6}, {4, 1, 3}, {4, 5, 2}, {3, 2, 6}});
  const double eps = 0.001;
  const Envy envy = TotalEnvy(InstB(eps), naive);
  EXPECT_GE(envy.total, 11.0 - (4.0 + eps));
  EXPECT_LE(envy.literal, envy.total);

  const Instance one = Instance::Create({{1, 2}}, {1, 1}, 1);
  const Allocation single = FromOneBased({{2}});
  const Envy none = TotalEnvy(one, single);
  EXPECT_EQ(none.total, 0.0);
  EXPECT_EQ(none.literal, 0.0);
}

TEST(EnvyTest, EnvyFreeAllocation) {
  // Each paper holds the reviewer it likes most.
  const Instance inst = Instance::Create({{5, 1}, {1, 5}}, {1, 1}, 1);
  const Allocation alloc = FromOneBased({{1}, {2}});
  const Envy envy = TotalEnvy(inst, alloc);
  EXPECT_EQ(envy.total, 0.0);
  EXPECT_EQ(envy.literal, -8.0);
  EXPECT_EQ(CheckEf1(inst, alloc).count(), 0);
}

TEST(EnvyTest, ZeroEnvyImpliesZeroEf1Violations) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomInstance(gen, {6, 8, 3, 2});
    const Allocation alloc = NaiveRoundRobin(
        inst, testing::RandomFullOrder(gen, inst.num_papers()));
    const Envy envy = TotalEnvy(inst, alloc);
    ASSERT_GE(envy.total, 0.0);
    if (envy.total == 0.0) ASSERT_EQ(CheckEf1(inst, alloc).count(), 0);
  }
}

TEST(LowestBlockTest, Examples) {
  const std::vector<double> equal(10, 2.5);
  PercentileBlock b = LowestBlock(equal, 0.1);
  EXPECT_EQ(b.mean, 2.5);
  EXPECT_EQ(b.stddev, 0.0);

  const std::vector<double> ranks = {10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  b = LowestBlock(ranks, 0.25);
  EXPECT_DOUBLE_EQ(b.mean, 2.0);
  EXPECT_DOUBLE_EQ(b.stddev, std::sqrt(2.0 / 3.0));

  b = LowestBlock(ranks, 1.0);
  EXPECT_DOUBLE_EQ(b.mean, 5.5);
  EXPECT_DOUBLE_EQ(b.stddev, std::sqrt(8.25));

  EXPECT_THROW(LowestBlock(ranks, 0.0), Error);
  EXPECT_THROW(LowestBlock(ranks, 1.5), Error);
}

TEST(FullReportTest, CounterexampleAllocations) {
  const Instance inst = InstB();
  const MetricsReport naive = FullReport(
      inst, FromOneBased({{1, 5, 6}, {4, 1, 3}, {4, 5, 2}, {3, 2, 6}}));
  EXPECT_GE(naive.ef1_violations, 1);
  const MetricsReport repaired = FullReport(
      inst, FromOneBased({{1, 5, 6}, {4, 1, 2}, {4, 5, 3}, {3, 2, 6}}));
  EXPECT_EQ(repaired.ef1_violations, 0);
  ASSERT_EQ(repaired.percentile_blocks.size(), 2u);
  EXPECT_EQ(repaired.percentile_blocks[0].fraction, 0.1);
  EXPECT_EQ(repaired.percentile_blocks[1].fraction, 0.25);
}

TEST(FullReportTest, EmptyAllocation) {
  const MetricsReport r = FullReport(InstA(), Allocation::Empty(3));
  EXPECT_EQ(r.usw_mean, 0.0);
  EXPECT_EQ(r.total_envy, 0.0);
  EXPECT_EQ(r.nsw, 0.0);
  EXPECT_EQ(r.zero_score_count, 3);
  EXPECT_EQ(r.gini, 0.0);
  EXPECT_EQ(r.min_score, 0.0);
}

TEST(FullReportTest, InvariantsAndPurity) {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::RandomInstance(gen);
    const Allocation alloc = ReviewerRoundRobin(
        inst, testing::RandomFullOrder(gen, inst.num_papers()));
    const MetricsReport a = FullReport(inst, alloc);
    const MetricsReport b = FullReport(inst, alloc);
    ASSERT_EQ(std::memcmp(&a.usw_mean, &b.usw_mean, sizeof(double)), 0);
    ASSERT_EQ(a.gini, b.gini);
    ASSERT_EQ(a.nsw == 0.0, a.zero_score_count > 0);
    ASSERT_GE(a.gini, 0.0);
    ASSERT_LE(a.gini, 1.0);
    ASSERT_GE(a.total_envy, 0.0);
    ASSERT_EQ(a.ef1_violations, 0);
  }
}

TEST(FormatReportTableTest, ShowsColumnsAndZeroNsw) {
  const MetricsReport r = FullReport(InstA(), FromOneBased({{4, 3}, {1, 6}, {}}));
  const std::string table = FormatReportTable("RRR", r);
  for (const char* col : {"Alg.", "USW", "NSW", "Min Score", "EF1 Viol.",
                          "Lowest 10%", "Lowest 25%", "Gini", "Envy"}) {
    EXPECT_NE(table.find(col), std::string::npos) << col;
  }
  EXPECT_NE(table.find("RRR"), std::string::npos);
  EXPECT_NE(table.find("0.00 ("), std::string::npos);
}

}  // namespace
}  // namespace revkit
