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

// Welfare and inequality statistics of an allocation. The score of paper i
// is s_i = v_i(A_i).

#ifndef REVKIT_METRICS_H_
#define REVKIT_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "revkit/instance.h"

namespace revkit {

// Mean paper score, i.e. USW / n.
double UswMean(const Instance& inst, const Allocation& alloc);

struct NashWelfare {
  double nsw = 0.0;           // geometric mean; 0 if any score is 0
  double nsw_positive = 0.0;  // geometric mean over positive scores
  int zero_score_count = 0;
};

NashWelfare Nsw(std::span<const double> scores);
NashWelfare Nsw(const Instance& inst, const Allocation& alloc);

// sum_ij |s_i - s_j| / (2 n sum_i s_i). Throws kInvalidArgument when every
// score is zero.
double Gini(std::span<const double> scores);
double Gini(const Instance& inst, const Allocation& alloc);

struct Envy {
  double total = 0.0;    // sum over i != j of max(0, v_i(A_j) - v_i(A_i))
  double literal = 0.0;  // same sum without the positive part
};

Envy TotalEnvy(const Instance& inst, const Allocation& alloc);

struct PercentileBlock {
  double fraction = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // population form
};

// Statistics of the ceil(fraction * n) lowest scores. fraction in (0, 1].
PercentileBlock LowestBlock(std::span<const double> scores, double fraction);
PercentileBlock LowestBlock(const Instance& inst, const Allocation& alloc,
                            double fraction);

struct MetricsReport {
  double usw_mean = 0.0;
  double nsw = 0.0;
  double nsw_positive = 0.0;
  int zero_score_count = 0;
  double min_score = 0.0;
  int ef1_violations = 0;
  double gini = 0.0;  // 0 when every score is zero
  double total_envy = 0.0;
  double literal_envy_sum = 0.0;
  std::vector<PercentileBlock> percentile_blocks;  // 10% and 25%
};

MetricsReport FullReport(const Instance& inst, const Allocation& alloc);

// Aligned table with the columns Alg. | USW | NSW | Min Score | EF1 Viol.
// When NSW is zero the positive-score NSW follows in parentheses.
std::string FormatReportTable(const std::string& label,
                              const MetricsReport& report);

}  // namespace revkit

#endif  // REVKIT_METRICS_H_
