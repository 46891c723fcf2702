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

// File formats. All ids in files are 1-based.
//
//  scores CSV   n rows x m columns of reals, comma separated, no header
//               unless requested.
//  loads        a CSV of m positive integers (one line or one per line), or
//               a single integer applied to every reviewer.
//  order        1-based paper ids separated by commas or whitespace, or a
//               JSON array, or a JSON object with an "order" array.
//  allocation   {"k", "bundles": {"<paper>": [reviewers ascending]},
//               "first_reviewer": {"<paper>": reviewer}, "halted_early",
//               "usw"}.

#ifndef REVKIT_IO_H_
#define REVKIT_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "revkit/instance.h"
#include "revkit/metrics.h"
#include "revkit/order_search.h"
#include "revkit/submodular.h"

namespace revkit {

enum class NegativeHandling { kReject, kShiftToZero };

std::vector<std::vector<double>> ParseScoresCsv(std::string_view text,
                                                bool skip_header = false);

// Parses a loads CSV for `num_reviewers` reviewers; a lone integer is
// broadcast.
std::vector<int> ParseLoads(std::string_view text, int num_reviewers);

struct LoadedInstance {
  Instance instance;
  // Amount added to every score (0 unless negatives were shifted).
  double shift = 0.0;
};

// Builds an instance from parsed rows. With kShiftToZero and a negative
// minimum, every value has the minimum subtracted; with kReject a negative
// value throws kNegativeValue.
LoadedInstance MakeInstance(std::vector<std::vector<double>> rows,
                            std::vector<int> capacities, int k,
                            NegativeHandling negatives);

// `loads` is either a path to a loads file or an integer literal.
LoadedInstance LoadInstance(const std::string& scores_path,
                            const std::string& loads, int k,
                            NegativeHandling negatives,
                            bool skip_header = false);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Shortest round-trip formatting of a double.
std::string FormatDouble(double value);

std::string ScoresToCsv(const Instance& inst);
std::string LoadsToCsv(const Instance& inst);

Order ParseOrder(std::string_view text);
nlohmann::json OrderToJson(const Order& order);

nlohmann::json AllocationToJson(const Instance& inst, const Allocation& alloc);
Allocation AllocationFromJson(const nlohmann::json& json, int num_papers);

nlohmann::json SearchResultToJson(const SearchResult& result,
                                  const GrrrConfig& cfg);
SearchResult SearchResultFromJson(const nlohmann::json& json);

nlohmann::json MetricsToJson(const MetricsReport& report);

nlohmann::json EstimationToJson(const AlphaEstimate& alpha,
                                const GammaEstimate& gamma,
                                const EstimationConfig& cfg);

// Canonical text of a JSON document: 2-space indent, trailing newline.
std::string DumpJson(const nlohmann::json& json);

enum class ValueDistribution { kUniform, kExponential };

struct SyntheticParams {
  int num_papers = 5;
  int num_reviewers = 20;
  int k = 3;
  int capacity_min = 1;
  int capacity_max = 1;
  ValueDistribution distribution = ValueDistribution::kUniform;
  uint64_t seed = 0;
};

// Deterministic random instance: capacities uniform in
// [capacity_min, capacity_max], values uniform(0, 1) or exponential(1).
// Throws kInvalidParams on inconsistent parameters.
Instance GenerateSynthetic(const SyntheticParams& params);

}  // namespace revkit

#endif  // REVKIT_IO_H_
