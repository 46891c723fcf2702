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

#include "revkit/round_robin.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "revkit/error.h"

namespace revkit {
namespace {

bool Contains(const std::vector<int>& sorted, int r) {
  return std::binary_search(sorted.begin(), sorted.end(), r);
}

void InsertSorted(std::vector<int>& sorted, int r) {
  sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), r), r);
}

// Sum over an ascending id list, matching BundleValue's accumulation order.
double SumSorted(std::span<const double> row, std::span<const int> ids) {
  double total = 0.0;
  for (int r : ids) total += row[r];
  return total;
}

class RrrState {
 public:
  RrrState(const Instance& inst, std::span<const int> order)
      : inst_(inst),
        alloc_(Allocation::Empty(inst.num_papers())),
        position_(inst.num_papers(), -1),
        load_(inst.num_reviewers(), 0),
        own_value_(inst.num_papers(), 0.0),
        objectors_(inst.num_reviewers()),
        is_objector_(static_cast<size_t>(inst.num_papers()) *
                         inst.num_reviewers(),
                     false) {
    for (size_t p = 0; p < order.size(); ++p) {
      position_[order[p]] = static_cast<int>(p);
    }
  }

  // One turn of `paper`. Returns false when every reviewer was refused.
  bool Turn(int paper, int round, RrrTrace* trace) {
    auto& bundle = alloc_.bundles[paper];
    for (int r : inst_.preference(paper)) {
      if (Contains(bundle, r)) {
        // Owners were registered as objectors at assignment time.
        if (trace) {
          trace->push_back(
              {round, paper, r, AttemptOutcome::kRefusedDuplicate});
        }
        continue;
      }
      RegisterObjector(r, paper);
      if (load_[r] >= inst_.capacity(r)) {
        if (trace) {
          trace->push_back({round, paper, r, AttemptOutcome::kRefusedCapacity});
        }
        continue;
      }
      const int objector = FindObjection(paper, r);
      if (objector >= 0) {
        if (trace) {
          trace->push_back({round, paper, r, AttemptOutcome::kRefusedObjection,
                            objector});
        }
        continue;
      }
      Assign(paper, r);
      if (trace) trace->push_back({round, paper, r, AttemptOutcome::kAssigned});
      return true;
    }
    return false;
  }

  Allocation Release(bool halted) && {
    alloc_.halted_early = halted;
    return std::move(alloc_);
  }

 private:
  void RegisterObjector(int r, int paper) {
    const size_t cell = static_cast<size_t>(paper) * inst_.num_reviewers() + r;
    if (!is_objector_[cell]) {
      is_objector_[cell] = true;
      objectors_[r].push_back(paper);
    }
  }

  // Returns the first objector of r that vetoes giving r to `paper`, or -1.
  int FindObjection(int paper, int r) {
    const auto& bundle = alloc_.bundles[paper];
    const int first = alloc_.first_reviewer[paper].value_or(r);
    // Candidate bundles, ascending: A_i + r and (A_i + r) - F_i.
    with_r_.assign(bundle.begin(), bundle.end());
    InsertSorted(with_r_, r);
    without_first_.clear();
    for (int x : with_r_) {
      if (x != first) without_first_.push_back(x);
    }
    for (int j : objectors_[r]) {
      if (j == paper) continue;
      const auto& seen_by_j =
          position_[j] < position_[paper] ? with_r_ : without_first_;
      if (SumSorted(inst_.row(j), seen_by_j) > own_value_[j]) return j;
    }
    return -1;
  }

  void Assign(int paper, int r) {
    auto& bundle = alloc_.bundles[paper];
    InsertSorted(bundle, r);
    if (!alloc_.first_reviewer[paper]) alloc_.first_reviewer[paper] = r;
    ++load_[r];
    RegisterObjector(r, paper);
    own_value_[paper] = SumSorted(inst_.row(paper), bundle);
  }

  const Instance& inst_;
  Allocation alloc_;
  std::vector<int> position_;
  std::vector<int> load_;
  std::vector<double> own_value_;
  std::vector<std::vector<int>> objectors_;
  std::vector<bool> is_objector_;
  std::vector<int> with_r_;
  std::vector<int> without_first_;
};

std::string_view OutcomeName(AttemptOutcome outcome) {
  switch (outcome) {
    case AttemptOutcome::kAssigned: return "assigned";
    case AttemptOutcome::kRefusedDuplicate: return "refused-duplicate";
    case AttemptOutcome::kRefusedCapacity: return "refused-capacity";
    case AttemptOutcome::kRefusedObjection: return "refused-objection";
  }
  return "";
}

int ParseInt(std::string_view s, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError,
                "trace line " + std::to_string(line) + ": bad integer '" +
                    std::string(s) + "'");
  }
  return value;
}

}  // namespace

Allocation ReviewerRoundRobin(const Instance& inst, std::span<const int> order,
                              RrrTrace* trace) {
  ValidateOrder(inst, order);
  RrrState state(inst, order);
  for (int round = 1; round <= inst.k(); ++round) {
    for (int paper : order) {
      if (!state.Turn(paper, round, trace)) {
        return std::move(state).Release(/*halted=*/true);
      }
    }
  }
  return std::move(state).Release(/*halted=*/false);
}

double UswRrr(const Instance& inst, std::span<const int> order) {
  return Usw(inst, ReviewerRoundRobin(inst, order));
}

Allocation NaiveRoundRobin(const Instance& inst, std::span<const int> order) {
  ValidateOrder(inst, order);
  Allocation alloc = Allocation::Empty(inst.num_papers());
  std::vector<int> load(inst.num_reviewers(), 0);
  for (int round = 0; round < inst.k(); ++round) {
    for (int paper : order) {
      auto& bundle = alloc.bundles[paper];
      for (int r : inst.preference(paper)) {
        if (Contains(bundle, r) || load[r] >= inst.capacity(r)) continue;
        InsertSorted(bundle, r);
        if (!alloc.first_reviewer[paper]) alloc.first_reviewer[paper] = r;
        ++load[r];
        break;
      }
    }
  }
  return alloc;
}

std::string FormatTrace(const RrrTrace& trace) {
  std::ostringstream out;
  out << "round,paper,reviewer,outcome\n";
  for (const auto& e : trace) {
    out << e.round << ',' << e.paper + 1 << ',' << e.reviewer + 1 << ','
        << OutcomeName(e.outcome);
    if (e.outcome == AttemptOutcome::kRefusedObjection) {
      out << '(' << e.objector + 1 << ')';
    }
    out << '\n';
  }
  return out.str();
}

RrrTrace ParseTrace(std::string_view text) {
  RrrTrace trace;
  int line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line == "round,paper,reviewer,outcome") continue;

    std::string_view fields[4];
    for (int f = 0; f < 3; ++f) {
      const size_t comma = line.find(',');
      if (comma == std::string_view::npos) {
        throw Error(ErrorCode::kParseError,
                    "trace line " + std::to_string(line_no) +
                        ": expected 4 fields");
      }
      fields[f] = line.substr(0, comma);
      line = line.substr(comma + 1);
    }
    fields[3] = line;

    TraceEvent e;
    e.round = ParseInt(fields[0], line_no);
    e.paper = ParseInt(fields[1], line_no) - 1;
    e.reviewer = ParseInt(fields[2], line_no) - 1;
    const std::string_view outcome = fields[3];
    constexpr std::string_view kObjection = "refused-objection(";
    if (outcome == "assigned") {
      e.outcome = AttemptOutcome::kAssigned;
    } else if (outcome == "refused-duplicate") {
      e.outcome = AttemptOutcome::kRefusedDuplicate;
    } else if (outcome == "refused-capacity") {
      e.outcome = AttemptOutcome::kRefusedCapacity;
    } else if (outcome.starts_with(kObjection) && outcome.ends_with(')')) {
      e.outcome = AttemptOutcome::kRefusedObjection;
      e.objector = ParseInt(outcome.substr(kObjection.size(),
                                           outcome.size() - kObjection.size() -
                                               1),
                            line_no) -
                   1;
    } else {
      throw Error(ErrorCode::kParseError,
                  "trace line " + std::to_string(line_no) +
                      ": unknown outcome '" + std::string(outcome) + "'");
    }
    trace.push_back(e);
  }
  return trace;
}

Allocation ReplayTrace(int num_papers, const RrrTrace& trace) {
  Allocation alloc = Allocation::Empty(num_papers);
  for (const auto& e : trace) {
    if (e.outcome != AttemptOutcome::kAssigned) continue;
    if (e.paper < 0 || e.paper >= num_papers) {
      throw Error(ErrorCode::kUnknownPaper, std::to_string(e.paper + 1));
    }
    InsertSorted(alloc.bundles[e.paper], e.reviewer);
    if (!alloc.first_reviewer[e.paper]) {
      alloc.first_reviewer[e.paper] = e.reviewer;
    }
  }
  return alloc;
}

}  // namespace revkit
