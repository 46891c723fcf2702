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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "revkit/error.h"

namespace revkit {

double UswMean(const Instance& inst, const Allocation& alloc) {
  return Usw(inst, alloc) / inst.num_papers();
}

NashWelfare Nsw(std::span<const double> scores) {
  NashWelfare out;
  double log_sum = 0.0;
  int positive = 0;
  for (double s : scores) {
    if (s > 0.0) {
      log_sum += std::log(s);
      ++positive;
    } else {
      ++out.zero_score_count;
    }
  }
  if (positive > 0) out.nsw_positive = std::exp(log_sum / positive);
  out.nsw = out.zero_score_count > 0 ? 0.0 : out.nsw_positive;
  return out;
}

NashWelfare Nsw(const Instance& inst, const Allocation& alloc) {
  const auto scores = PaperScores(inst, alloc);
  return Nsw(scores);
}

double Gini(std::span<const double> scores) {
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double s : sorted) total += s;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kAllZeroScores,
                "Gini coefficient needs a positive score");
  }
  // sum_{i<j} (s_j - s_i) over the sorted scores, collected by rank.
  const double n = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) + 1.0 - n) * sorted[i];
  }
  return weighted / (n * total);
}

double Gini(const Instance& inst, const Allocation& alloc) {
  const auto scores = PaperScores(inst, alloc);
  return Gini(scores);
}

Envy TotalEnvy(const Instance& inst, const Allocation& alloc) {
  const int n = inst.num_papers();
  const auto own = PaperScores(inst, alloc);
  Envy envy;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double diff = BundleValue(inst, i, alloc.bundles[j]) - own[i];
      envy.literal += diff;
      if (diff > 0.0) envy.total += diff;
    }
  }
  return envy;
}

PercentileBlock LowestBlock(std::span<const double> scores, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fraction must lie in (0, 1]");
  }
  PercentileBlock block;
  block.fraction = fraction;
  if (scores.empty()) return block;
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const size_t count = std::min(
      sorted.size(), static_cast<size_t>(std::ceil(
                         fraction * static_cast<double>(sorted.size()))));
  double sum = 0.0;
  for (size_t i = 0; i < count; ++i) sum += sorted[i];
  block.mean = sum / static_cast<double>(count);
  double sq = 0.0;
  for (size_t i = 0; i < count; ++i) {
    sq += (sorted[i] - block.mean) * (sorted[i] - block.mean);
  }
  block.stddev = std::sqrt(sq / static_cast<double>(count));
  return block;
}

PercentileBlock LowestBlock(const Instance& inst, const Allocation& alloc,
                            double fraction) {
  const auto scores = PaperScores(inst, alloc);
  return LowestBlock(scores, fraction);
}

MetricsReport FullReport(const Instance& inst, const Allocation& alloc) {
  MetricsReport report;
  report.ef1_violations = CheckEf1(inst, alloc).count();
  const auto scores = PaperScores(inst, alloc);
  double total = 0.0;
  for (double s : scores) total += s;
  report.usw_mean = total / inst.num_papers();
  const NashWelfare nash = Nsw(scores);
  report.nsw = nash.nsw;
  report.nsw_positive = nash.nsw_positive;
  report.zero_score_count = nash.zero_score_count;
  report.min_score = *std::min_element(scores.begin(), scores.end());
  report.gini = total > 0.0 ? Gini(scores) : 0.0;
  const Envy envy = TotalEnvy(inst, alloc);
  report.total_envy = envy.total;
  report.literal_envy_sum = envy.literal;
  for (double fraction : {0.10, 0.25}) {
    report.percentile_blocks.push_back(LowestBlock(scores, fraction));
  }
  return report;
}

std::string FormatReportTable(const std::string& label,
                              const MetricsReport& report) {
  char nsw[64];
  if (report.zero_score_count > 0) {
    std::snprintf(nsw, sizeof(nsw), "%.2f (%.2f)", report.nsw,
                  report.nsw_positive);
  } else {
    std::snprintf(nsw, sizeof(nsw), "%.2f", report.nsw);
  }
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-10s %10s %16s %10s %10s\n", "Alg.",
                "USW", "NSW", "Min Score", "EF1 Viol.");
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-10s %10.2f %16s %10.2f %10d\n",
                label.c_str(), report.usw_mean, nsw, report.min_score,
                report.ef1_violations);
  out += buf;
  out += "\n";
  std::snprintf(buf, sizeof(buf), "%-10s %18s %18s %8s %12s\n", "Alg.",
                "Lowest 10%", "Lowest 25%", "Gini", "Envy");
  out += buf;
  char low10[64];
  char low25[64];
  const auto& blocks = report.percentile_blocks;
  std::snprintf(low10, sizeof(low10), "%.3f +- %.3f", blocks[0].mean,
                blocks[0].stddev);
  std::snprintf(low25, sizeof(low25), "%.3f +- %.3f", blocks[1].mean,
                blocks[1].stddev);
  std::snprintf(buf, sizeof(buf), "%-10s %18s %18s %8.3f %12.4g\n",
                label.c_str(), low10, low25, report.gini, report.total_envy);
  out += buf;
  return out;
}

}  // namespace revkit
