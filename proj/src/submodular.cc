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

#include "revkit/submodular.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "revkit/error.h"
#include "revkit/parallel.h"
#include "revkit/rng.h"
#include "revkit/round_robin.h"

namespace revkit {
namespace {

std::string DescribeSet(const TupleSet& ts) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < ts.size(); ++i) {
    const Tuple& t = ts.elements()[i];
    out << (i ? "," : "") << '(' << t.paper + 1 << ',' << t.position + 1
        << ')';
  }
  out << '}';
  return out.str();
}

TupleSet FromMask(int n, uint32_t mask) {
  std::vector<Tuple> elements;
  for (int e = 0; e < n * n; ++e) {
    if (mask >> e & 1U) elements.push_back({e / n, e % n});
  }
  return TupleSet(std::move(elements));
}

Tuple FromIndex(int n, int index) { return {index / n, index % n}; }

void CheckEstimationConfig(const EstimationConfig& cfg) {
  if (cfg.num_samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "num_samples must be >= 1");
  }
  if (!(cfg.margin >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "margin must be >= 0");
  }
  if (cfg.max_prefix && *cfg.max_prefix < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_prefix must be >= 0");
  }
}

struct GammaSample {
  TupleSet x;
  TupleSet y;
  Tuple e;
};

std::vector<GammaSample> DrawGammaSamples(int n, const EstimationConfig& cfg) {
  const int ground = n * n;
  int cap = ground - 1;
  if (cfg.gamma_sampling == GammaSampling::kPrefixShaped) cap = std::min(cap, n);
  if (cfg.max_prefix) cap = std::min(cap, *cfg.max_prefix);

  Rng rng(cfg.seed);
  std::vector<int> pool(ground);
  std::vector<int> papers(n);
  std::vector<GammaSample> samples;
  samples.reserve(cfg.num_samples);
  for (int s = 0; s < cfg.num_samples; ++s) {
    const int size = static_cast<int>(rng.UniformIndex(cap + 1));
    std::vector<Tuple> y;
    Tuple e;
    if (cfg.gamma_sampling == GammaSampling::kArbitrary) {
      std::iota(pool.begin(), pool.end(), 0);
      rng.PartialShuffle(std::span<int>(pool), size + 1);
      for (int i = 0; i < size; ++i) y.push_back(FromIndex(n, pool[i]));
      e = FromIndex(n, pool[size]);
    } else {
      std::iota(papers.begin(), papers.end(), 0);
      rng.PartialShuffle(std::span<int>(papers), size);
      for (int l = 0; l < size; ++l) y.push_back({papers[l], l});
      const TupleSet prefix(y);
      do {
        e = FromIndex(n, static_cast<int>(rng.UniformIndex(ground)));
      } while (prefix.Contains(e));
    }
    std::vector<Tuple> x;
    for (const Tuple& t : y) {
      if (rng.Next() >> 63) x.push_back(t);
    }
    samples.push_back({TupleSet(std::move(x)), TupleSet(std::move(y)), e});
  }
  return samples;
}

}  // namespace

TupleSet::TupleSet(std::vector<Tuple> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), PositionMajor());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool TupleSet::Contains(const Tuple& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t,
                            PositionMajor());
}

TupleSet TupleSet::With(const Tuple& t) const {
  TupleSet out = *this;
  const auto it = std::lower_bound(out.elements_.begin(), out.elements_.end(),
                                   t, PositionMajor());
  if (it == out.elements_.end() || !(*it == t)) out.elements_.insert(it, t);
  return out;
}

bool IsIndependent(const TupleSet& ts) {
  std::vector<int> papers;
  std::vector<int> positions;
  for (const Tuple& t : ts.elements()) {
    papers.push_back(t.paper);
    positions.push_back(t.position);
  }
  std::sort(papers.begin(), papers.end());
  std::sort(positions.begin(), positions.end());
  return std::adjacent_find(papers.begin(), papers.end()) == papers.end() &&
         std::adjacent_find(positions.begin(), positions.end()) ==
             positions.end();
}

Order SetToOrder(const TupleSet& ts) {
  Order order;
  for (const Tuple& t : ts.elements()) {
    if (std::find(order.begin(), order.end(), t.paper) == order.end()) {
      order.push_back(t.paper);
    }
  }
  return order;
}

TupleSet OrderToSet(std::span<const int> order) {
  std::vector<Tuple> elements;
  for (size_t l = 0; l < order.size(); ++l) {
    elements.push_back({order[l], static_cast<int>(l)});
  }
  return TupleSet(std::move(elements));
}

double FValue(const Instance& inst, const TupleSet& ts, double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  const int n = inst.num_papers();
  for (const Tuple& t : ts.elements()) {
    if (t.paper < 0 || t.paper >= n || t.position < 0 || t.position >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tuple outside the ground set: " + DescribeSet(ts));
    }
  }
  if (ts.empty()) return 0.0;
  return UswRrr(inst, SetToOrder(ts)) *
         std::pow(static_cast<double>(ts.size()), alpha);
}

double MarginalGain(const Instance& inst, const TupleSet& ts, const Tuple& e,
                    double alpha) {
  if (ts.Contains(e)) {
    throw Error(ErrorCode::kElementPresent,
                "(" + std::to_string(e.paper + 1) + "," +
                    std::to_string(e.position + 1) + ") already in the set");
  }
  return FValue(inst, ts.With(e), alpha) - FValue(inst, ts, alpha);
}

std::vector<AlphaSample> SampleAppends(const Instance& inst,
                                       const EstimationConfig& cfg) {
  CheckEstimationConfig(cfg);
  const int n = inst.num_papers();
  int cap = n - 1;
  if (cfg.max_prefix) cap = std::min(cap, *cfg.max_prefix);

  Rng rng(cfg.seed);
  std::vector<int> papers(n);
  std::vector<AlphaSample> samples(cfg.num_samples);
  for (auto& sample : samples) {
    const int length = static_cast<int>(rng.UniformIndex(cap + 1));
    std::iota(papers.begin(), papers.end(), 0);
    rng.PartialShuffle(std::span<int>(papers), length + 1);
    sample.order.assign(papers.begin(), papers.begin() + length);
    sample.paper = papers[length];
  }
  ParallelFor(samples.size(), cfg.parallelism, [&](size_t s) {
    AlphaSample& sample = samples[s];
    sample.usw_before = UswRrr(inst, sample.order);
    Order extended = sample.order;
    extended.push_back(sample.paper);
    sample.usw_after = UswRrr(inst, extended);
  });
  return samples;
}

AlphaEstimate EstimateAlpha(const Instance& inst,
                            const EstimationConfig& cfg) {
  AlphaEstimate estimate;
  const auto samples = SampleAppends(inst, cfg);
  estimate.samples = static_cast<int>(samples.size());
  for (const AlphaSample& s : samples) {
    if (s.usw_after >= s.usw_before) continue;
    if (s.usw_after <= 0.0) {
      std::ostringstream msg;
      msg << "appending paper " << s.paper + 1 << " to order [";
      for (size_t l = 0; l < s.order.size(); ++l) {
        msg << (l ? "," : "") << s.order[l] + 1;
      }
      msg << "] drops welfare from " << s.usw_before
          << " to 0; no finite alpha";
      throw Error(ErrorCode::kUnboundedAlpha, msg.str());
    }
    const double length = static_cast<double>(s.order.size());
    const double required = std::log(s.usw_before / s.usw_after) /
                            std::log((length + 1.0) / length);
    ++estimate.constraining;
    estimate.max_required = std::max(estimate.max_required, required);
  }
  if (estimate.constraining > 0) {
    estimate.alpha = (1.0 + cfg.margin) * estimate.max_required;
  }
  return estimate;
}

AlphaEstimate ExhaustiveAlpha(const Instance& inst, double margin) {
  const int n = inst.num_papers();
  if (n > kExhaustiveGammaLimit) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive alpha enumerates 2^(n^2) sets; n = " +
                    std::to_string(n) + " exceeds " +
                    std::to_string(kExhaustiveGammaLimit));
  }
  if (!(margin >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "margin must be >= 0");
  }
  const int ground = n * n;
  const uint32_t full = (1U << ground) - 1U;
  std::vector<double> usw(size_t{1} << ground);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    usw[mask] = UswRrr(inst, SetToOrder(FromMask(n, mask)));
  }
  AlphaEstimate estimate;
  for (uint32_t x = 1; x <= full; ++x) {
    const double size = std::popcount(x);
    for (int e = 0; e < ground; ++e) {
      const uint32_t bit = 1U << e;
      if (x & bit) continue;
      ++estimate.samples;
      const double before = usw[x];
      const double after = usw[x | bit];
      if (after >= before) continue;
      if (after <= 0.0) {
        throw Error(ErrorCode::kUnboundedAlpha,
                    "adding an element to " + DescribeSet(FromMask(n, x)) +
                        " drops welfare to 0; no finite alpha");
      }
      ++estimate.constraining;
      estimate.max_required =
          std::max(estimate.max_required,
                   std::log(before / after) / std::log((size + 1.0) / size));
    }
  }
  if (estimate.constraining > 0) {
    estimate.alpha = (1.0 + margin) * estimate.max_required;
  }
  return estimate;
}

GammaEstimate EstimateGamma(int num_papers, const SetFunction& f,
                            const EstimationConfig& cfg) {
  CheckEstimationConfig(cfg);
  if (num_papers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one paper");
  }
  const auto samples = DrawGammaSamples(num_papers, cfg);
  std::vector<double> gain_x(samples.size());
  std::vector<double> gain_y(samples.size());
  ParallelFor(samples.size(), cfg.parallelism, [&](size_t s) {
    const GammaSample& sample = samples[s];
    gain_x[s] = f(sample.x.With(sample.e)) - f(sample.x);
    gain_y[s] = f(sample.y.With(sample.e)) - f(sample.y);
  });

  GammaEstimate estimate;
  estimate.samples = static_cast<int>(samples.size());
  for (size_t s = 0; s < samples.size(); ++s) {
    if (gain_x[s] <= cfg.zero_tolerance) {
      ++estimate.skipped_zero_gain;
      if (gain_x[s] < 0.0) ++estimate.negative_gain;
      continue;
    }
    const double ratio = gain_y[s] / gain_x[s];
    estimate.max_ratio =
        estimate.valid == 0 ? ratio : std::max(estimate.max_ratio, ratio);
    ++estimate.valid;
  }
  if (estimate.valid == 0) {
    throw Error(ErrorCode::kNoValidSamples,
                "no sample had a positive marginal gain on the smaller set");
  }
  estimate.gamma = std::max(1.0, (1.0 + cfg.margin) * estimate.max_ratio);
  return estimate;
}

GammaEstimate EstimateGamma(const Instance& inst, double alpha,
                            const EstimationConfig& cfg) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  return EstimateGamma(
      inst.num_papers(),
      [&inst, alpha](const TupleSet& ts) { return FValue(inst, ts, alpha); },
      cfg);
}

double ExhaustiveGamma(int num_papers, const SetFunction& f,
                       double zero_tolerance) {
  if (num_papers > kExhaustiveGammaLimit) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive gamma enumerates 2^(n^2) sets; n = " +
                    std::to_string(num_papers) + " exceeds " +
                    std::to_string(kExhaustiveGammaLimit));
  }
  if (num_papers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one paper");
  }
  const int n = num_papers;
  const int ground = n * n;
  const uint32_t full = (1U << ground) - 1U;
  std::vector<double> value(size_t{1} << ground);
  for (uint32_t mask = 0; mask <= full; ++mask) value[mask] = f(FromMask(n, mask));

  double best = 1.0;
  for (uint32_t y = 0; y <= full; ++y) {
    for (int e = 0; e < ground; ++e) {
      const uint32_t bit = 1U << e;
      if (y & bit) continue;
      const double gain_y = value[y | bit] - value[y];
      for (uint32_t x = y;; x = (x - 1) & y) {
        const double gain_x = value[x | bit] - value[x];
        if (gain_x > zero_tolerance) {
          best = std::max(best, gain_y / gain_x);
        } else if (gain_y > zero_tolerance) {
          const Tuple t = FromIndex(n, e);
          throw Error(ErrorCode::kUnboundedGamma,
                      "X=" + DescribeSet(FromMask(n, x)) +
                          " Y=" + DescribeSet(FromMask(n, y)) + " e=(" +
                          std::to_string(t.paper + 1) + "," +
                          std::to_string(t.position + 1) +
                          "): rho_e(X)=" + std::to_string(gain_x) +
                          " rho_e(Y)=" + std::to_string(gain_y));
        }
        if (x == 0) break;
      }
    }
  }
  return best;
}

double ExhaustiveGamma(const Instance& inst, double alpha,
                       double zero_tolerance) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  return ExhaustiveGamma(
      inst.num_papers(),
      [&inst, alpha](const TupleSet& ts) { return FValue(inst, ts, alpha); },
      zero_tolerance);
}

}  // namespace revkit
