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

#include "revkit/io.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "revkit/error.h"
#include "revkit/rng.h"

namespace revkit {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto blank = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    lines.push_back(text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text = text.substr(eol + 1);
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const size_t comma = line.find(',');
    fields.push_back(Trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line = line.substr(comma + 1);
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Error ParseErrorAt(int row, int col, std::string_view what) {
  return Error(ErrorCode::kParseError,
               "row " + std::to_string(row) + ", col " + std::to_string(col) +
                   ": " + std::string(what));
}

int PaperKey(const std::string& key, int num_papers) {
  int paper = 0;
  if (!ParseNumber(std::string_view(key), paper) || paper < 1 ||
      paper > num_papers) {
    throw Error(ErrorCode::kParseError, "bad paper id '" + key + "'");
  }
  return paper - 1;
}

}  // namespace

std::vector<std::vector<double>> ParseScoresCsv(std::string_view text,
                                                bool skip_header) {
  std::vector<std::vector<double>> rows;
  const auto lines = SplitLines(text);
  size_t width = 0;
  for (size_t l = skip_header ? 1 : 0; l < lines.size(); ++l) {
    const std::string_view line = Trim(lines[l]);
    if (line.empty()) continue;
    const int row = static_cast<int>(l) + 1;
    const auto fields = SplitFields(line);
    std::vector<double> values(fields.size());
    for (size_t c = 0; c < fields.size(); ++c) {
      if (!ParseNumber(fields[c], values[c])) {
        throw ParseErrorAt(row, static_cast<int>(c) + 1,
                           "not a number: '" + std::string(fields[c]) + "'");
      }
    }
    if (rows.empty()) {
      width = values.size();
    } else if (values.size() != width) {
      throw ParseErrorAt(row, static_cast<int>(values.size()),
                         "expected " + std::to_string(width) + " columns");
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw Error(ErrorCode::kParseError, "no score rows");
  return rows;
}

std::vector<int> ParseLoads(std::string_view text, int num_reviewers) {
  std::vector<int> loads;
  const auto lines = SplitLines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const std::string_view line = Trim(lines[l]);
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    for (size_t c = 0; c < fields.size(); ++c) {
      int load = 0;
      if (!ParseNumber(fields[c], load)) {
        throw ParseErrorAt(static_cast<int>(l) + 1, static_cast<int>(c) + 1,
                           "not an integer: '" + std::string(fields[c]) + "'");
      }
      loads.push_back(load);
    }
  }
  if (loads.size() == 1) loads.assign(num_reviewers, loads.front());
  if (loads.size() != static_cast<size_t>(num_reviewers)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "loads list has " + std::to_string(loads.size()) +
                    " entries for " + std::to_string(num_reviewers) +
                    " reviewers");
  }
  return loads;
}

LoadedInstance MakeInstance(std::vector<std::vector<double>> rows,
                            std::vector<int> capacities, int k,
                            NegativeHandling negatives) {
  double minimum = 0.0;
  for (const auto& row : rows) {
    for (double v : row) minimum = std::min(minimum, v);
  }
  double shift = 0.0;
  if (minimum < 0.0 && negatives == NegativeHandling::kShiftToZero) {
    shift = -minimum;
    for (auto& row : rows) {
      for (double& v : row) v -= minimum;
    }
  }
  return {Instance::Create(rows, std::move(capacities), k), shift};
}

LoadedInstance LoadInstance(const std::string& scores_path,
                            const std::string& loads, int k,
                            NegativeHandling negatives, bool skip_header) {
  auto rows = ParseScoresCsv(ReadFile(scores_path), skip_header);
  const int m = static_cast<int>(rows.front().size());
  int uniform = 0;
  std::vector<int> capacities;
  if (!std::filesystem::exists(loads) && ParseNumber(Trim(loads), uniform)) {
    capacities.assign(m, uniform);
  } else {
    capacities = ParseLoads(ReadFile(loads), m);
  }
  return MakeInstance(std::move(rows), std::move(capacities), k, negatives);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string ScoresToCsv(const Instance& inst) {
  std::string out;
  for (int i = 0; i < inst.num_papers(); ++i) {
    for (int r = 0; r < inst.num_reviewers(); ++r) {
      if (r) out += ',';
      out += FormatDouble(inst.value(i, r));
    }
    out += '\n';
  }
  return out;
}

std::string LoadsToCsv(const Instance& inst) {
  std::string out;
  for (int r = 0; r < inst.num_reviewers(); ++r) {
    if (r) out += ',';
    out += std::to_string(inst.capacity(r));
  }
  out += '\n';
  return out;
}

Order ParseOrder(std::string_view text) {
  const std::string_view body = Trim(text);
  std::vector<int> ids;
  if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    const json& list = doc.is_object() ? doc.at("order") : doc;
    if (!list.is_array()) {
      throw Error(ErrorCode::kParseError, "order must be an array");
    }
    for (const auto& id : list) {
      if (!id.is_number_integer()) {
        throw Error(ErrorCode::kParseError, "order ids must be integers");
      }
      ids.push_back(id.get<int>());
    }
  } else {
    std::string token;
    std::istringstream in{std::string(body)};
    std::string chunk;
    while (in >> chunk) {
      std::replace(chunk.begin(), chunk.end(), ',', ' ');
      std::istringstream parts(chunk);
      while (parts >> token) {
        int id = 0;
        if (!ParseNumber(std::string_view(token), id)) {
          throw Error(ErrorCode::kParseError, "bad paper id '" + token + "'");
        }
        ids.push_back(id);
      }
    }
  }
  Order order;
  for (int id : ids) {
    if (id < 1) {
      throw Error(ErrorCode::kInvalidOrder,
                  "paper ids are 1-based; got " + std::to_string(id));
    }
    order.push_back(id - 1);
  }
  return order;
}

json OrderToJson(const Order& order) {
  json list = json::array();
  for (int p : order) list.push_back(p + 1);
  return list;
}

json AllocationToJson(const Instance& inst, const Allocation& alloc) {
  json bundles = json::object();
  json first = json::object();
  for (size_t i = 0; i < alloc.bundles.size(); ++i) {
    std::vector<int> sorted = alloc.bundles[i];
    std::sort(sorted.begin(), sorted.end());
    json list = json::array();
    for (int r : sorted) list.push_back(r + 1);
    const std::string key = std::to_string(i + 1);
    bundles[key] = std::move(list);
    if (alloc.first_reviewer[i]) first[key] = *alloc.first_reviewer[i] + 1;
  }
  return {{"k", inst.k()},
          {"bundles", std::move(bundles)},
          {"first_reviewer", std::move(first)},
          {"halted_early", alloc.halted_early},
          {"usw", Usw(inst, alloc)}};
}

Allocation AllocationFromJson(const json& doc, int num_papers) {
  Allocation alloc = Allocation::Empty(num_papers);
  try {
    for (const auto& [key, list] : doc.at("bundles").items()) {
      const int paper = PaperKey(key, num_papers);
      for (const auto& r : list) alloc.bundles[paper].push_back(r.get<int>() - 1);
      std::sort(alloc.bundles[paper].begin(), alloc.bundles[paper].end());
    }
    if (doc.contains("first_reviewer")) {
      for (const auto& [key, r] : doc.at("first_reviewer").items()) {
        alloc.first_reviewer[PaperKey(key, num_papers)] = r.get<int>() - 1;
      }
    }
    alloc.halted_early = doc.value("halted_early", false);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return alloc;
}

json SearchResultToJson(const SearchResult& result, const GrrrConfig& cfg) {
  // Worker count is left out: it never changes the result.
  json config = {{"seed", cfg.seed}};
  config["subsample_size"] =
      cfg.subsample_size ? json(*cfg.subsample_size) : json(nullptr);
  return {{"order", OrderToJson(result.order)},
          {"usw", result.usw},
          {"per_step_usw", result.per_step_usw},
          {"config", std::move(config)}};
}

SearchResult SearchResultFromJson(const json& doc) {
  SearchResult result;
  try {
    for (const auto& id : doc.at("order")) result.order.push_back(id.get<int>() - 1);
    result.usw = doc.at("usw").get<double>();
    result.per_step_usw = doc.at("per_step_usw").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return result;
}

json MetricsToJson(const MetricsReport& report) {
  json blocks = json::array();
  for (const auto& b : report.percentile_blocks) {
    blocks.push_back(
        {{"fraction", b.fraction}, {"mean", b.mean}, {"std", b.stddev}});
  }
  return {{"usw_mean", report.usw_mean},
          {"nsw", report.nsw},
          {"nsw_positive", report.nsw_positive},
          {"zero_score_count", report.zero_score_count},
          {"min_score", report.min_score},
          {"ef1_violations", report.ef1_violations},
          {"gini", report.gini},
          {"total_envy", report.total_envy},
          {"literal_envy_sum", report.literal_envy_sum},
          {"percentile_blocks", std::move(blocks)}};
}

json EstimationToJson(const AlphaEstimate& alpha, const GammaEstimate& gamma,
                      const EstimationConfig& cfg) {
  return {{"alpha", alpha.alpha},
          {"gamma", gamma.gamma},
          {"samples", gamma.samples},
          {"skipped_zero_gain", gamma.skipped_zero_gain},
          {"margin", cfg.margin},
          {"seed", cfg.seed},
          {"alpha_samples", alpha.samples},
          {"alpha_constraining", alpha.constraining},
          {"alpha_max_required", alpha.max_required},
          {"gamma_valid", gamma.valid},
          {"gamma_negative_gain", gamma.negative_gain},
          {"gamma_max_ratio", gamma.max_ratio},
          {"rng_version", kRngVersion}};
}

std::string DumpJson(const json& doc) { return doc.dump(2) + "\n"; }

Instance GenerateSynthetic(const SyntheticParams& p) {
  if (p.num_papers < 1 || p.num_reviewers < 1) {
    throw Error(ErrorCode::kInvalidParams, "need n >= 1 and m >= 1");
  }
  if (p.k < 1 || p.k > p.num_reviewers) {
    throw Error(ErrorCode::kInvalidParams, "need 1 <= k <= m");
  }
  if (p.capacity_min < 1 || p.capacity_max < p.capacity_min) {
    throw Error(ErrorCode::kInvalidParams,
                "need 1 <= capacity_min <= capacity_max");
  }
  Rng rng(p.seed);
  std::vector<int> capacities(p.num_reviewers);
  const uint64_t span = static_cast<uint64_t>(p.capacity_max - p.capacity_min) + 1;
  for (int& c : capacities) {
    c = p.capacity_min + static_cast<int>(rng.UniformIndex(span));
  }
  std::vector<double> values(static_cast<size_t>(p.num_papers) *
                             p.num_reviewers);
  for (double& v : values) {
    v = p.distribution == ValueDistribution::kUniform ? rng.UniformDouble()
                                                      : rng.Exponential();
  }
  return Instance::Create(p.num_papers, p.num_reviewers, std::move(values),
                          std::move(capacities), p.k);
}

}  // namespace revkit
