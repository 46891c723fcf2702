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

// Problem model for reviewer assignment treated as fair division: papers are
// agents, reviewers are indivisible goods. Valuations are additive and
// non-negative. Every id in this API is 0-based; file formats and the CLI
// use 1-based ids and convert at the boundary.

#ifndef REVKIT_INSTANCE_H_
#define REVKIT_INSTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revkit {

// A picking sequence: distinct paper ids, possibly covering only a prefix of
// the papers.
using Order = std::vector<int>;

// Immutable problem statement. Holds the n x m affinity matrix (row-major,
// one row per paper), per-reviewer capacities and the bundle limit k.
class Instance {
 public:
  // Validates and builds an instance. `values` is row-major with
  // num_papers * num_reviewers entries.
  static Instance Create(int num_papers, int num_reviewers,
                         std::vector<double> values,
                         std::vector<int> capacities, int k);
  static Instance Create(const std::vector<std::vector<double>>& rows,
                         std::vector<int> capacities, int k);

  int num_papers() const { return num_papers_; }
  int num_reviewers() const { return num_reviewers_; }
  int k() const { return k_; }

  double value(int paper, int reviewer) const {
    return values_[static_cast<size_t>(paper) * num_reviewers_ + reviewer];
  }
  std::span<const double> row(int paper) const {
    return {values_.data() + static_cast<size_t>(paper) * num_reviewers_,
            static_cast<size_t>(num_reviewers_)};
  }
  const std::vector<double>& values() const { return values_; }

  int capacity(int reviewer) const { return capacities_[reviewer]; }
  const std::vector<int>& capacities() const { return capacities_; }

  // Reviewers sorted by decreasing value for `paper`, ties by ascending id.
  std::span<const int> preference(int paper) const {
    return {preferences_.data() + static_cast<size_t>(paper) * num_reviewers_,
            static_cast<size_t>(num_reviewers_)};
  }

  bool operator==(const Instance& other) const {
    return num_papers_ == other.num_papers_ &&
           num_reviewers_ == other.num_reviewers_ && k_ == other.k_ &&
           values_ == other.values_ && capacities_ == other.capacities_;
  }

 private:
  Instance() = default;

  int num_papers_ = 0;
  int num_reviewers_ = 0;
  int k_ = 0;
  std::vector<double> values_;
  std::vector<int> capacities_;
  std::vector<int> preferences_;
};

// Per-paper reviewer bundles. Bundles are kept in ascending reviewer order;
// first_reviewer records the reviewer a paper received first, when known.
struct Allocation {
  std::vector<std::vector<int>> bundles;
  std::vector<std::optional<int>> first_reviewer;
  bool halted_early = false;

  static Allocation Empty(int num_papers);

  bool operator==(const Allocation&) const = default;
};

// Sum of v_paper(r) over `bundle`, accumulated in ascending reviewer id order
// so that results are bit-reproducible regardless of how the bundle is
// stored. Throws kUnknownReviewer for ids outside [0, m).
double BundleValue(const Instance& inst, int paper,
                   std::span<const int> bundle);

// v_i(A_i) for every paper.
std::vector<double> PaperScores(const Instance& inst, const Allocation& alloc);

// Utilitarian social welfare: the un-normalized sum of paper scores.
double Usw(const Instance& inst, const Allocation& alloc);

struct Violation {
  enum class Kind {
    kPaperCountMismatch,
    kUnknownReviewer,
    kDuplicateInBundle,
    kBundleTooLarge,
    kOverCapacity,
  };
  Kind kind;
  int paper = -1;     // -1 when not tied to one paper
  int reviewer = -1;  // -1 when not tied to one reviewer

  std::string ToString() const;
  bool operator==(const Violation&) const = default;
};

// Constraint check: distinct reviewers per bundle, |A_i| <= k, and reviewer
// loads within capacity. An empty result means the allocation is valid.
std::vector<Violation> ValidateAllocation(const Instance& inst,
                                          const Allocation& alloc);

// True iff every paper holds exactly k reviewers. Assumes a valid allocation.
bool IsComplete(const Instance& inst, const Allocation& alloc);

struct Ef1Report {
  // Ordered pairs (i, j): paper i envies paper j beyond one reviewer.
  std::vector<std::pair<int, int>> violating_pairs;

  int count() const { return static_cast<int>(violating_pairs.size()); }
};

// Lists every pair (i, j), i != j, such that removing any single reviewer
// from A_j still leaves v_i(A_j \ {r}) > v_i(A_i). Empty bundles are never
// envied. Throws kInvalidAllocation when ValidateAllocation fails.
Ef1Report CheckEf1(const Instance& inst, const Allocation& alloc);

// Throws kInvalidOrder on duplicate or out-of-range paper ids.
void ValidateOrder(const Instance& inst, std::span<const int> order);

}  // namespace revkit

#endif  // REVKIT_INSTANCE_H_
