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

#include "revkit/rng.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "revkit/parallel.h"

namespace revkit {
namespace {

// Straight transcription of the public-domain reference generators.
uint64_t RefSplitMix(uint64_t* x) {
  uint64_t z = (*x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

struct RefXoshiro {
  uint64_t s[4];
  uint64_t Next() {
    const uint64_t result = Rotl(s[1] * 5, 7) * 9;
    const uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = Rotl(s[3], 45);
    return result;
  }
};

TEST(RngTest, SplitMixKnownValue) {
  uint64_t x = 0;
  EXPECT_EQ(RefSplitMix(&x), 0xe220a8397b1dcdafULL);
}

TEST(RngTest, MatchesTheReferenceGenerator) {
  for (uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL, ~0ULL}) {
    uint64_t x = seed;
    RefXoshiro ref;
    for (auto& w : ref.s) w = RefSplitMix(&x);
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.Next(), ref.Next());
  }
}

TEST(RngTest, VersionPin) {
  EXPECT_EQ(kRngVersion, 1);
  Rng rng(0);
  EXPECT_EQ(rng.UniformIndex(1000), 615u);
}

TEST(RngTest, UniformIndexStaysInRangeAndCoversIt) {
  Rng rng(3);
  for (uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 64ULL, 1000ULL}) {
    std::vector<int> hits(bound, 0);
    for (int i = 0; i < 20000; ++i) {
      const uint64_t v = rng.UniformIndex(bound);
      ASSERT_LT(v, bound);
      ++hits[v];
    }
    if (bound <= 64) {
      for (int h : hits) EXPECT_GT(h, 0);
    }
  }
}

TEST(RngTest, DoublesAndExponentials) {
  Rng rng(4);
  double sum = 0.0;
  double esum = 0.0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    const double u = rng.UniformDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    const double e = rng.Exponential();
    ASSERT_GE(e, 0.0);
    esum += e;
  }
  EXPECT_NEAR(sum / draws, 0.5, 0.01);
  EXPECT_NEAR(esum / draws, 1.0, 0.02);
}

TEST(RngTest, PartialShuffleKeepsAPermutation) {
  Rng rng(5);
  std::vector<int> items(50);
  std::iota(items.begin(), items.end(), 0);
  rng.PartialShuffle(std::span<int>(items), 10);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  // Counts larger than the range are clamped.
  rng.PartialShuffle(std::span<int>(items), 500);
  std::vector<int> empty;
  rng.PartialShuffle(std::span<int>(empty), 3);
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  for (int workers : {1, 2, 3, 8}) {
    std::vector<std::atomic<int>> seen(101);
    ParallelFor(seen.size(), workers, [&](size_t i) { ++seen[i]; });
    for (const auto& s : seen) EXPECT_EQ(s.load(), 1);
  }
  ParallelFor(0, 4, [](size_t) { FAIL(); });
}

TEST(ParallelForTest, RethrowsWorkerExceptions) {
  EXPECT_THROW(ParallelFor(10, 3,
                           [](size_t i) {
                             if (i == 7) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

}  // namespace
}  // namespace revkit
