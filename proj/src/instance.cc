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

#include "revkit/instance.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "revkit/error.h"

namespace revkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kInvalidCapacity: return "InvalidCapacity";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kUnknownReviewer: return "UnknownReviewer";
    case ErrorCode::kUnknownPaper: return "UnknownPaper";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidAllocation: return "InvalidAllocation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kElementPresent: return "ElementPresent";
    case ErrorCode::kUnboundedAlpha: return "Unbounded";
    case ErrorCode::kUnboundedGamma: return "UnboundedGamma";
    case ErrorCode::kNoValidSamples: return "NoValidSamples";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kAllZeroScores: return "AllZeroScores";
  }
  return "Unknown";
}

Instance Instance::Create(int num_papers, int num_reviewers,
                          std::vector<double> values,
                          std::vector<int> capacities, int k) {
  if (num_papers < 1 || num_reviewers < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "need at least one paper and one reviewer");
  }
  const size_t cells = static_cast<size_t>(num_papers) * num_reviewers;
  if (values.size() != cells) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(cells) + " values, got " +
                    std::to_string(values.size()));
  }
  if (capacities.size() != static_cast<size_t>(num_reviewers)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(num_reviewers) +
                    " capacities, got " + std::to_string(capacities.size()));
  }
  if (k < 1 || k > num_reviewers) {
    throw Error(ErrorCode::kInvalidK,
                "k = " + std::to_string(k) + " must lie in [1, " +
                    std::to_string(num_reviewers) + "]");
  }
  for (size_t c = 0; c < cells; ++c) {
    const int paper = static_cast<int>(c / num_reviewers);
    const int reviewer = static_cast<int>(c % num_reviewers);
    if (!std::isfinite(values[c])) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "paper " + std::to_string(paper + 1) + ", reviewer " +
                      std::to_string(reviewer + 1));
    }
    if (values[c] < 0.0) {
      throw Error(ErrorCode::kNegativeValue,
                  "paper " + std::to_string(paper + 1) + ", reviewer " +
                      std::to_string(reviewer + 1) + " has value " +
                      std::to_string(values[c]));
    }
  }
  for (int r = 0; r < num_reviewers; ++r) {
    if (capacities[r] < 1) {
      throw Error(ErrorCode::kInvalidCapacity,
                  "reviewer " + std::to_string(r + 1) + " has capacity " +
                      std::to_string(capacities[r]));
    }
  }

  Instance inst;
  inst.num_papers_ = num_papers;
  inst.num_reviewers_ = num_reviewers;
  inst.k_ = k;
  inst.values_ = std::move(values);
  inst.capacities_ = std::move(capacities);
  inst.preferences_.resize(cells);
  for (int i = 0; i < num_papers; ++i) {
    auto first = inst.preferences_.begin() +
                 static_cast<std::ptrdiff_t>(i) * num_reviewers;
    auto last = first + num_reviewers;
    std::iota(first, last, 0);
    const auto row = inst.row(i);
    std::stable_sort(first, last,
                     [&](int a, int b) { return row[a] > row[b]; });
  }
  return inst;
}

Instance Instance::Create(const std::vector<std::vector<double>>& rows,
                          std::vector<int> capacities, int k) {
  if (rows.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "no papers");
  }
  const size_t m = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * m);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(m));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Create(static_cast<int>(rows.size()), static_cast<int>(m),
                std::move(flat), std::move(capacities), k);
}

Allocation Allocation::Empty(int num_papers) {
  Allocation alloc;
  alloc.bundles.resize(num_papers);
  alloc.first_reviewer.resize(num_papers);
  return alloc;
}

double BundleValue(const Instance& inst, int paper,
                   std::span<const int> bundle) {
  if (paper < 0 || paper >= inst.num_papers()) {
    throw Error(ErrorCode::kUnknownPaper, std::to_string(paper));
  }
  for (int r : bundle) {
    if (r < 0 || r >= inst.num_reviewers()) {
      throw Error(ErrorCode::kUnknownReviewer, std::to_string(r));
    }
  }
  const auto row = inst.row(paper);
  double total = 0.0;
  if (std::is_sorted(bundle.begin(), bundle.end())) {
    for (int r : bundle) total += row[r];
    return total;
  }
  std::vector<int> sorted(bundle.begin(), bundle.end());
  std::sort(sorted.begin(), sorted.end());
  for (int r : sorted) total += row[r];
  return total;
}

std::vector<double> PaperScores(const Instance& inst,
                                const Allocation& alloc) {
  std::vector<double> scores(alloc.bundles.size());
  for (size_t i = 0; i < alloc.bundles.size(); ++i) {
    scores[i] = BundleValue(inst, static_cast<int>(i), alloc.bundles[i]);
  }
  return scores;
}

double Usw(const Instance& inst, const Allocation& alloc) {
  double total = 0.0;
  for (double s : PaperScores(inst, alloc)) total += s;
  return total;
}

std::string Violation::ToString() const {
  switch (kind) {
    case Kind::kPaperCountMismatch:
      return "PaperCountMismatch";
    case Kind::kUnknownReviewer:
      return "UnknownReviewer(paper " + std::to_string(paper + 1) +
             ", reviewer " + std::to_string(reviewer + 1) + ")";
    case Kind::kDuplicateInBundle:
      return "DuplicateInBundle(paper " + std::to_string(paper + 1) +
             ", reviewer " + std::to_string(reviewer + 1) + ")";
    case Kind::kBundleTooLarge:
      return "BundleTooLarge(paper " + std::to_string(paper + 1) + ")";
    case Kind::kOverCapacity:
      return "OverCapacity(reviewer " + std::to_string(reviewer + 1) + ")";
  }
  return "Unknown";
}

std::vector<Violation> ValidateAllocation(const Instance& inst,
                                          const Allocation& alloc) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  if (alloc.bundles.size() != static_cast<size_t>(inst.num_papers())) {
    out.push_back({Kind::kPaperCountMismatch});
    return out;
  }
  const int m = inst.num_reviewers();
  std::vector<int> load(m, 0);
  for (int i = 0; i < inst.num_papers(); ++i) {
    std::vector<int> sorted = alloc.bundles[i];
    std::sort(sorted.begin(), sorted.end());
    for (size_t p = 0; p < sorted.size(); ++p) {
      const int r = sorted[p];
      if (r < 0 || r >= m) {
        out.push_back({Kind::kUnknownReviewer, i, r});
        continue;
      }
      if (p > 0 && sorted[p - 1] == r) {
        out.push_back({Kind::kDuplicateInBundle, i, r});
        continue;
      }
      ++load[r];
    }
    if (static_cast<int>(alloc.bundles[i].size()) > inst.k()) {
      out.push_back({Kind::kBundleTooLarge, i});
    }
  }
  for (int r = 0; r < m; ++r) {
    if (load[r] > inst.capacity(r)) out.push_back({Kind::kOverCapacity, -1, r});
  }
  return out;
}

bool IsComplete(const Instance& inst, const Allocation& alloc) {
  return std::all_of(alloc.bundles.begin(), alloc.bundles.end(),
                     [&](const std::vector<int>& b) {
                       return static_cast<int>(b.size()) == inst.k();
                     });
}

Ef1Report CheckEf1(const Instance& inst, const Allocation& alloc) {
  const auto violations = ValidateAllocation(inst, alloc);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidAllocation, violations.front().ToString());
  }
  const int n = inst.num_papers();
  std::vector<std::vector<int>> sorted(alloc.bundles);
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  const std::vector<double> own = PaperScores(inst, alloc);

  Ef1Report report;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || sorted[j].empty()) continue;
      bool satisfied = false;
      for (size_t drop = 0; drop < sorted[j].size() && !satisfied; ++drop) {
        rest.clear();
        for (size_t p = 0; p < sorted[j].size(); ++p) {
          if (p != drop) rest.push_back(sorted[j][p]);
        }
        satisfied = BundleValue(inst, i, rest) <= own[i];
      }
      if (!satisfied) report.violating_pairs.emplace_back(i, j);
    }
  }
  return report;
}

void ValidateOrder(const Instance& inst, std::span<const int> order) {
  const int n = inst.num_papers();
  if (order.size() > static_cast<size_t>(n)) {
    throw Error(ErrorCode::kInvalidOrder, "order longer than paper count");
  }
  std::vector<bool> seen(n, false);
  for (int paper : order) {
    if (paper < 0 || paper >= n) {
      throw Error(ErrorCode::kInvalidOrder,
                  "paper id " + std::to_string(paper + 1) + " out of range");
    }
    if (seen[paper]) {
      throw Error(ErrorCode::kInvalidOrder,
                  "paper " + std::to_string(paper + 1) + " appears twice");
    }
    seen[paper] = true;
  }
}

}  // namespace revkit
