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

#include "revkit/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "revkit/error.h"
#include "revkit/io.h"
#include "revkit/metrics.h"
#include "revkit/order_search.h"
#include "revkit/round_robin.h"
#include "revkit/submodular.h"

namespace revkit {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct InstanceFlags {
  std::string scores;
  std::string loads;
  int k = 0;
  bool header = false;
  bool shift_negative = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--scores", scores, "Dense n x m affinity CSV")->required();
    cmd->add_option("--loads", loads,
                    "Reviewer loads CSV, or one integer for every reviewer")
        ->required();
    cmd->add_option("--k", k, "Maximum reviewers per paper")->required();
    cmd->add_flag("--header", header, "Skip a header row in the scores CSV");
    cmd->add_flag("--shift-negative", shift_negative,
                  "Subtract the global minimum when scores are negative");
  }

  LoadedInstance Load() const {
    return LoadInstance(scores, loads, k,
                        shift_negative ? NegativeHandling::kShiftToZero
                                       : NegativeHandling::kReject,
                        header);
  }
};

class RunLog {
 public:
  RunLog(std::ostream& err, std::string command)
      : err_(err), command_(std::move(command)), start_(Clock::now()) {}

  void Set(const std::string& key, const std::string& value) {
    fields_[key] = value;
  }

  void Flush(const std::string& path) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - start_)
                        .count();
    std::string line = "run " + command_;
    for (const auto& [key, value] : fields_) line += " " + key + "=" + value;
    line += " wall_ms=" + std::to_string(ms) + "\n";
    if (path.empty()) {
      err_ << line;
    } else {
      std::ofstream(path, std::ios::app) << line;
    }
  }

 private:
  std::ostream& err_;
  std::string command_;
  Clock::time_point start_;
  std::map<std::string, std::string> fields_;
};

void Emit(std::ostream& out, const std::string& path,
          const std::string& contents) {
  if (path.empty()) {
    out << contents;
  } else {
    WriteFile(path, contents);
  }
}

int DefaultJobs() {
  if (const char* env = std::getenv("REVKIT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string FormatPairs(const Ef1Report& report) {
  std::string out;
  for (const auto& [i, j] : report.violating_pairs) {
    out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")\n";
  }
  return out;
}

// Loads an allocation and fails with the violation list when it is invalid.
std::optional<Allocation> LoadValidAllocation(const Instance& inst,
                                              const std::string& path,
                                              std::ostream& err) {
  Allocation alloc =
      AllocationFromJson(json::parse(ReadFile(path)), inst.num_papers());
  const auto violations = ValidateAllocation(inst, alloc);
  if (violations.empty()) return alloc;
  err << "invalid allocation:\n";
  for (const auto& v : violations) err << "  " << v.ToString() << "\n";
  return std::nullopt;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fair reviewer assignment with Reviewer Round Robin", "revkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_path;
  app.add_option("--log", log_path, "Append the run log here (default stderr)");

  InstanceFlags inst_flags;
  uint64_t seed = 0;
  std::optional<int> subsample;
  int jobs = DefaultJobs();
  std::string out_path;

  // assign
  std::string order_out, metrics_out, trace_out;
  auto* assign = app.add_subcommand(
      "assign", "Greedy order search, then RRR; writes the allocation JSON");
  inst_flags.Register(assign);
  assign->add_option("--seed", seed, "Sampling seed");
  assign->add_option("--subsample", subsample,
                     "Candidates evaluated per greedy step");
  assign->add_option("--jobs", jobs, "Worker threads (env REVKIT_JOBS)");
  assign->add_option("--out", out_path, "Allocation JSON (default stdout)");
  assign->add_option("--order-out", order_out, "Search result JSON");
  assign->add_option("--metrics-out", metrics_out, "Metrics JSON");
  assign->add_option("--trace-out", trace_out, "RRR trace");

  // rrr
  std::string order_path;
  auto* rrr = app.add_subcommand("rrr", "Run RRR on a given order");
  inst_flags.Register(rrr);
  rrr->add_option("--order", order_path, "Order file (1-based ids)")
      ->required();
  rrr->add_option("--out", out_path, "Allocation JSON (default stdout)");
  rrr->add_option("--trace-out", trace_out, "RRR trace");

  // check-ef1
  std::string alloc_path;
  auto* check = app.add_subcommand("check-ef1", "List EF1-violating pairs");
  inst_flags.Register(check);
  check->add_option("--alloc", alloc_path, "Allocation JSON")->required();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Welfare/inequality report");
  inst_flags.Register(metrics);
  metrics->add_option("--alloc", alloc_path, "Allocation JSON")->required();
  metrics->add_option("--out", out_path, "Metrics JSON");

  // oracle
  int max_n = kDefaultExhaustiveLimit;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive best order");
  inst_flags.Register(oracle);
  oracle->add_option("--max-n", max_n, "Largest n to enumerate");
  oracle->add_option("--out", out_path, "Result JSON (default stdout)");

  // estimate
  EstimationConfig est;
  std::string gamma_sampling = "arbitrary";
  std::optional<double> alpha_override;
  auto* estimate =
      app.add_subcommand("estimate", "Estimate alpha, then gamma (JSON)");
  inst_flags.Register(estimate);
  estimate->add_option("--samples", est.num_samples, "Samples per estimate");
  estimate->add_option("--seed", seed, "Sampling seed");
  estimate->add_option("--max-prefix", est.max_prefix,
                       "Cap on sampled order/subset sizes");
  estimate->add_option("--margin", est.margin, "Relative slack");
  estimate->add_option("--gamma-sampling", gamma_sampling)
      ->check(CLI::IsMember({"arbitrary", "prefix"}));
  estimate->add_option("--alpha", alpha_override,
                       "Use this alpha instead of estimating it");
  estimate->add_option("--jobs", jobs, "Worker threads (env REVKIT_JOBS)");
  estimate->add_option("--out", out_path, "Estimates JSON (default stdout)");

  // gen
  SyntheticParams gen_params;
  std::string dist = "uniform";
  std::string loads_out;
  auto* gen = app.add_subcommand("gen", "Write a synthetic instance");
  gen->add_option("--n", gen_params.num_papers)->required();
  gen->add_option("--m", gen_params.num_reviewers)->required();
  gen->add_option("--k", gen_params.k)->required();
  gen->add_option("--cap-min", gen_params.capacity_min);
  gen->add_option("--cap-max", gen_params.capacity_max);
  gen->add_option("--dist", dist)
      ->check(CLI::IsMember({"uniform", "exponential"}));
  gen->add_option("--seed", gen_params.seed);
  gen->add_option("--out", out_path, "Scores CSV")->required();
  gen->add_option("--out-loads", loads_out, "Loads CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      gen_params.distribution = dist == "uniform"
                                    ? ValueDistribution::kUniform
                                    : ValueDistribution::kExponential;
      if (gen_params.capacity_max < gen_params.capacity_min) {
        gen_params.capacity_max = gen_params.capacity_min;
      }
      const Instance inst = GenerateSynthetic(gen_params);
      WriteFile(out_path, ScoresToCsv(inst));
      WriteFile(loads_out, LoadsToCsv(inst));
      return kExitOk;
    }

    const LoadedInstance loaded = inst_flags.Load();
    const Instance& inst = loaded.instance;

    if (assign->parsed()) {
      RunLog log(err, "assign");
      log.Set("seed", std::to_string(seed));
      log.Set("subsample", subsample ? std::to_string(*subsample) : "none");
      log.Set("jobs", std::to_string(jobs));
      log.Set("negative_shift", FormatDouble(loaded.shift));
      GrrrConfig cfg{subsample, seed, jobs};
      const SearchResult search = GreedyRrr(inst, cfg);
      RrrTrace trace;
      const Allocation alloc =
          ReviewerRoundRobin(inst, search.order, trace_out.empty() ? nullptr : &trace);
      const MetricsReport report = FullReport(inst, alloc);
      Emit(out, out_path, DumpJson(AllocationToJson(inst, alloc)));
      if (!order_out.empty()) {
        WriteFile(order_out, DumpJson(SearchResultToJson(search, cfg)));
      }
      if (!metrics_out.empty()) {
        WriteFile(metrics_out, DumpJson(MetricsToJson(report)));
      }
      if (!trace_out.empty()) WriteFile(trace_out, FormatTrace(trace));
      if (!out_path.empty()) {
        out << "USW " << FormatDouble(Usw(inst, alloc)) << "\n"
            << FormatReportTable("GRRR", report);
      }
      log.Flush(log_path);
      return kExitOk;
    }

    if (rrr->parsed()) {
      const Order order = ParseOrder(ReadFile(order_path));
      RrrTrace trace;
      const Allocation alloc =
          ReviewerRoundRobin(inst, order, trace_out.empty() ? nullptr : &trace);
      Emit(out, out_path, DumpJson(AllocationToJson(inst, alloc)));
      if (!trace_out.empty()) WriteFile(trace_out, FormatTrace(trace));
      if (!out_path.empty()) {
        out << "USW " << FormatDouble(Usw(inst, alloc)) << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const auto alloc = LoadValidAllocation(inst, alloc_path, err);
      if (!alloc) return kExitValidation;
      const Ef1Report report = CheckEf1(inst, *alloc);
      out << "ef1_violations " << report.count() << "\n" << FormatPairs(report);
      return kExitOk;
    }

    if (metrics->parsed()) {
      const auto alloc = LoadValidAllocation(inst, alloc_path, err);
      if (!alloc) return kExitValidation;
      const MetricsReport report = FullReport(inst, *alloc);
      out << FormatReportTable("input", report);
      if (!out_path.empty()) WriteFile(out_path, DumpJson(MetricsToJson(report)));
      return kExitOk;
    }

    if (oracle->parsed()) {
      const OptimalOrder best = ExhaustiveBestOrder(inst, max_n);
      Emit(out, out_path,
           DumpJson({{"order", OrderToJson(best.order)}, {"usw", best.usw}}));
      return kExitOk;
    }

    if (estimate->parsed()) {
      RunLog log(err, "estimate");
      est.seed = seed;
      est.parallelism = jobs;
      est.gamma_sampling = gamma_sampling == "prefix"
                               ? GammaSampling::kPrefixShaped
                               : GammaSampling::kArbitrary;
      log.Set("seed", std::to_string(seed));
      log.Set("samples", std::to_string(est.num_samples));
      log.Set("negative_shift", FormatDouble(loaded.shift));
      AlphaEstimate alpha;
      if (alpha_override) {
        alpha.alpha = *alpha_override;
      } else {
        alpha = EstimateAlpha(inst, est);
      }
      const GammaEstimate gamma = EstimateGamma(inst, alpha.alpha, est);
      Emit(out, out_path, DumpJson(EstimationToJson(alpha, gamma, est)));
      log.Flush(log_path);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace revkit
