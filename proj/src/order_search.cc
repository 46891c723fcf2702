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

#include "revkit/order_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>

#include "revkit/error.h"
#include "revkit/parallel.h"
#include "revkit/rng.h"
#include "revkit/round_robin.h"

namespace revkit {

SearchResult GreedyRrr(const Instance& inst, const GrrrConfig& cfg) {
  const int n = inst.num_papers();
  if (cfg.subsample_size && (*cfg.subsample_size < 1 ||
                             *cfg.subsample_size > n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "subsample size must lie in [1, " + std::to_string(n) + "]");
  }
  Rng rng(cfg.seed);
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);

  SearchResult result;
  result.order.reserve(n);
  std::vector<double> values;
  while (!remaining.empty()) {
    size_t num_candidates = remaining.size();
    if (cfg.subsample_size &&
        static_cast<size_t>(*cfg.subsample_size) < remaining.size()) {
      num_candidates = *cfg.subsample_size;
      rng.PartialShuffle(std::span<int>(remaining), num_candidates);
    }
    values.assign(num_candidates, 0.0);
    ParallelFor(num_candidates, cfg.parallelism, [&](size_t c) {
      Order trial = result.order;
      trial.push_back(remaining[c]);
      values[c] = UswRrr(inst, trial);
    });

    // Deterministic reduction on (value desc, paper id asc).
    size_t best = 0;
    for (size_t c = 1; c < num_candidates; ++c) {
      if (values[c] > values[best] ||
          (values[c] == values[best] && remaining[c] < remaining[best])) {
        best = c;
      }
    }
    result.order.push_back(remaining[best]);
    result.per_step_usw.push_back(values[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  result.usw = result.per_step_usw.empty() ? 0.0 : result.per_step_usw.back();
  return result;
}

OptimalOrder ExhaustiveBestOrder(const Instance& inst, int max_papers) {
  const int n = inst.num_papers();
  if (n > max_papers) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " papers exceeds the exhaustive limit of " +
                    std::to_string(max_papers) +
                    "; use greedy search with --subsample instead");
  }
  Order order(n);
  std::iota(order.begin(), order.end(), 0);
  OptimalOrder best{order, -std::numeric_limits<double>::infinity()};
  do {
    const double usw = UswRrr(inst, order);
    if (usw > best.usw) best = {order, usw};
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

ApproximationReport CheckApproximation(const Instance& inst,
                                       const SearchResult& alg,
                                       double opt_value, double gamma,
                                       double alpha) {
  if (!(gamma >= 1.0) || !(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need gamma >= 1 and alpha > 0");
  }
  ApproximationReport report;
  report.alpha = alpha;
  report.gamma = gamma;
  const auto size_factor = [alpha](size_t size) {
    return size == 0 ? 0.0 : std::pow(static_cast<double>(size), alpha);
  };
  report.f_alg = alg.usw * size_factor(alg.order.size());
  report.f_opt = opt_value * size_factor(inst.num_papers());
  if (report.f_opt == 0.0) {
    report.zero_optimum = true;
    report.ratio = std::numeric_limits<double>::infinity();
    return report;
  }
  report.ratio = report.f_alg * (1.0 + gamma * gamma) / report.f_opt;
  report.violated = report.ratio < 1.0;
  return report;
}

}  // namespace revkit
