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

// Picking-order search for RRR: the greedy order builder (GRRR) and an
// exhaustive optimum used as a desk-scale oracle.

#ifndef REVKIT_ORDER_SEARCH_H_
#define REVKIT_ORDER_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "revkit/instance.h"

namespace revkit {

struct GrrrConfig {
  // Candidates evaluated per step; all remaining papers when unset.
  std::optional<int> subsample_size;
  uint64_t seed = 0;
  int parallelism = 1;
};

struct SearchResult {
  Order order;
  double usw = 0.0;
  // USW of RRR on the order after each greedy append.
  std::vector<double> per_step_usw;
};

// Greedy RRR: starting from the empty order, appends at every step the
// remaining paper i that maximizes UswRrr(order + i), ties by ascending paper
// id. With subsampling, each step draws a uniform sample (without
// replacement) of the remaining papers from an Rng seeded once with
// cfg.seed. Results are independent of cfg.parallelism.
SearchResult GreedyRrr(const Instance& inst, const GrrrConfig& cfg = {});

struct OptimalOrder {
  Order order;
  double usw = 0.0;
};

inline constexpr int kDefaultExhaustiveLimit = 8;

// Enumerates every full order and returns the one maximizing UswRrr, ties by
// the lexicographically smallest order. Throws kTooLarge above `max_papers`.
OptimalOrder ExhaustiveBestOrder(const Instance& inst,
                                 int max_papers = kDefaultExhaustiveLimit);

// Greedy-vs-optimum check for the (1 + gamma^2) guarantee on the monotonized
// objective f = USW * |P|^alpha.
struct ApproximationReport {
  double f_alg = 0.0;
  double f_opt = 0.0;
  double alpha = 0.0;
  double gamma = 1.0;
  // f_alg * (1 + gamma^2) / f_opt; +inf when f_opt is zero.
  double ratio = 0.0;
  bool zero_optimum = false;
  bool violated = false;  // ratio < 1
};

// Throws kInvalidArgument unless gamma >= 1 and alpha > 0.
ApproximationReport CheckApproximation(const Instance& inst,
                                       const SearchResult& alg,
                                       double opt_value, double gamma,
                                       double alpha);

}  // namespace revkit

#endif  // REVKIT_ORDER_SEARCH_H_
