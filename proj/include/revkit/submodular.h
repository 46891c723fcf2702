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

// Set-function view of order search.
//
// The ground set is E = {(paper, position)} over [0, n)^2. A subset maps to a
// picking order by sorting on (position, paper) and keeping the first tuple
// of each paper; the independent sets (no repeated paper, no repeated
// position) are exactly the encodings of orders. The monotonized objective is
// f(P) = UswRrr(order(P)) * |P|^alpha with 0^alpha = 0, and its weak
// submodularity ratio gamma bounds rho_e(Y) / rho_e(X) for X within Y.

#ifndef REVKIT_SUBMODULAR_H_
#define REVKIT_SUBMODULAR_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "revkit/instance.h"

namespace revkit {

struct Tuple {
  int paper = 0;
  int position = 0;

  bool operator==(const Tuple&) const = default;
};

// Orders tuples by position, then paper.
struct PositionMajor {
  bool operator()(const Tuple& a, const Tuple& b) const {
    return a.position != b.position ? a.position < b.position
                                    : a.paper < b.paper;
  }
};

// A finite set of tuples, stored sorted by PositionMajor without duplicates.
class TupleSet {
 public:
  TupleSet() = default;
  explicit TupleSet(std::vector<Tuple> elements);

  bool Contains(const Tuple& t) const;
  TupleSet With(const Tuple& t) const;

  size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Tuple>& elements() const { return elements_; }

  bool operator==(const TupleSet&) const = default;

 private:
  std::vector<Tuple> elements_;
};

// Membership in the intersection of the two partition matroids.
bool IsIndependent(const TupleSet& ts);

// Position-major sort, first tuple per paper wins.
Order SetToOrder(const TupleSet& ts);

// {(order[l], l)}: the prefix-shaped independent encoding of an order.
TupleSet OrderToSet(std::span<const int> order);

// UswRrr(SetToOrder(ts)) * |ts|^alpha. Throws kInvalidArgument when
// alpha <= 0 or a tuple lies outside [0, n)^2.
double FValue(const Instance& inst, const TupleSet& ts, double alpha);

// f(ts + e) - f(ts). Throws kElementPresent when e is already in ts.
double MarginalGain(const Instance& inst, const TupleSet& ts, const Tuple& e,
                    double alpha);

using SetFunction = std::function<double(const TupleSet&)>;

enum class GammaSampling {
  // Y uniform over subsets of E of a uniformly drawn size.
  kArbitrary,
  // Y the prefix encoding of a uniformly drawn partial order.
  kPrefixShaped,
};

struct EstimationConfig {
  int num_samples = 1000;
  uint64_t seed = 0;
  // Cap on sampled order lengths (alpha) and subset sizes (gamma).
  std::optional<int> max_prefix;
  // Relative slack applied to both estimates.
  double margin = 0.01;
  // Marginal gains at or below this are treated as zero.
  double zero_tolerance = 1e-12;
  GammaSampling gamma_sampling = GammaSampling::kArbitrary;
  int parallelism = 1;
};

inline constexpr double kAlphaFloor = 0.01;

// One sampled append: order O, a paper i outside O, and both welfare values.
struct AlphaSample {
  Order order;
  int paper = 0;
  double usw_before = 0.0;
  double usw_after = 0.0;
};

struct AlphaEstimate {
  double alpha = kAlphaFloor;
  int samples = 0;
  int constraining = 0;
  // Largest alpha required by a single sample; 0 when none constrains.
  double max_required = 0.0;
};

// The appends EstimateAlpha looks at, in sampling order.
std::vector<AlphaSample> SampleAppends(const Instance& inst,
                                       const EstimationConfig& cfg);

// Smallest alpha making every sampled append non-decreasing in f, inflated
// by (1 + margin); kAlphaFloor when no sample constrains. Throws
// kUnboundedAlpha when an append drops welfare to exactly zero.
AlphaEstimate EstimateAlpha(const Instance& inst, const EstimationConfig& cfg);

// Exact counterpart of EstimateAlpha for n <= 3: the smallest alpha making
// f non-decreasing on every pair X, X + e of subsets of E (not only on
// prefix-shaped appends), inflated by (1 + margin), with the same floor.
// `samples` counts the (X, e) pairs examined. Throws kTooLarge for n > 3 and
// kUnboundedAlpha when some X + e has zero welfare below a positive f(X).
AlphaEstimate ExhaustiveAlpha(const Instance& inst, double margin = 0.01);

struct GammaEstimate {
  double gamma = 1.0;
  int samples = 0;
  int valid = 0;
  // Samples with rho_e(X) <= zero_tolerance; of those, how many negative.
  int skipped_zero_gain = 0;
  int negative_gain = 0;
  double max_ratio = 0.0;
};

// max(1, (1 + margin) * max sampled rho_e(Y) / rho_e(X)). Throws
// kNoValidSamples when every sample had a non-positive rho_e(X).
GammaEstimate EstimateGamma(const Instance& inst, double alpha,
                            const EstimationConfig& cfg);
GammaEstimate EstimateGamma(int num_papers, const SetFunction& f,
                            const EstimationConfig& cfg);

inline constexpr int kExhaustiveGammaLimit = 3;

// Exact max of rho_e(Y) / rho_e(X) over every X within Y within E and e
// outside Y with rho_e(X) > tolerance, clamped below at 1. Throws kTooLarge
// for n > 3 and kUnboundedGamma when some rho_e(X) <= tolerance <
// rho_e(Y).
double ExhaustiveGamma(const Instance& inst, double alpha,
                       double zero_tolerance = 1e-12);
double ExhaustiveGamma(int num_papers, const SetFunction& f,
                       double zero_tolerance = 1e-12);

}  // namespace revkit

#endif  // REVKIT_SUBMODULAR_H_
