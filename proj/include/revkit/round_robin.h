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

// Reviewer Round Robin (RRR).
//
// The mechanism runs k rounds. In each round the papers of `order` take
// turns; a paper walks its reviewers from most to least valued (ties by
// ascending id) and attempts each one. Every attempt makes the paper an
// objector of that reviewer. An attempt of paper i on reviewer r succeeds iff
//   (a) r is not already in A_i,
//   (b) r has spare capacity, and
//   (c) no other objector j of r would envy i's enlarged bundle beyond the
//       discount it is owed: if j precedes i in the order, j compares
//       v_j(A_i + r) against v_j(A_j); if i precedes j, j compares
//       v_j((A_i + r) - F_i), F_i being i's first reviewer.
// A paper that cannot take anyone on its turn stops the whole mechanism and
// the partial allocation is returned with halted_early set.
//
// The output is EF1 and respects every capacity and the bundle limit; when
// m >= k * n it is also complete.

#ifndef REVKIT_ROUND_ROBIN_H_
#define REVKIT_ROUND_ROBIN_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revkit/instance.h"

namespace revkit {

enum class AttemptOutcome {
  kAssigned,
  kRefusedDuplicate,
  kRefusedCapacity,
  kRefusedObjection,
};

struct TraceEvent {
  int round = 0;  // 1-based
  int paper = 0;
  int reviewer = 0;
  AttemptOutcome outcome = AttemptOutcome::kAssigned;
  int objector = -1;  // set for kRefusedObjection

  bool operator==(const TraceEvent&) const = default;
};

using RrrTrace = std::vector<TraceEvent>;

// Runs RRR on the papers of `order`; papers outside the order keep empty
// bundles. When `trace` is non-null every attempt is appended to it.
// Throws kInvalidOrder.
Allocation ReviewerRoundRobin(const Instance& inst, std::span<const int> order,
                              RrrTrace* trace = nullptr);

// USW of ReviewerRoundRobin(inst, order).
double UswRrr(const Instance& inst, std::span<const int> order);

// Constrained round robin without objection checks: each paper takes its
// best reviewer that it does not hold and that has capacity left, and simply
// skips its turn when none exists. Not EF1 in general.
Allocation NaiveRoundRobin(const Instance& inst, std::span<const int> order);

// Line format with a header row: "round,paper,reviewer,outcome", 1-based ids,
// outcome one of assigned | refused-duplicate | refused-capacity |
// refused-objection(<paper>).
std::string FormatTrace(const RrrTrace& trace);
RrrTrace ParseTrace(std::string_view text);

// Rebuilds bundles and first reviewers from the assigned events of a trace.
Allocation ReplayTrace(int num_papers, const RrrTrace& trace);

}  // namespace revkit

#endif  // REVKIT_ROUND_ROBIN_H_
