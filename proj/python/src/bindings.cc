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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revkit/error.h"
#include "revkit/io.h"
#include "revkit/metrics.h"
#include "revkit/order_search.h"
#include "revkit/round_robin.h"
#include "revkit/submodular.h"

namespace py = pybind11;
using namespace revkit;

namespace {

TupleSet ToTupleSet(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Tuple> tuples;
  for (const auto& [paper, position] : pairs) tuples.push_back({paper, position});
  return TupleSet(std::move(tuples));
}

EstimationConfig MakeEstimationConfig(int samples, uint64_t seed,
                                      std::optional<int> max_prefix,
                                      double margin, const std::string& mode,
                                      int jobs) {
  EstimationConfig cfg;
  cfg.num_samples = samples;
  cfg.seed = seed;
  cfg.max_prefix = max_prefix;
  cfg.margin = margin;
  cfg.parallelism = jobs;
  if (mode == "prefix") {
    cfg.gamma_sampling = GammaSampling::kPrefixShaped;
  } else if (mode != "arbitrary") {
    throw Error(ErrorCode::kInvalidArgument,
                "gamma sampling must be 'arbitrary' or 'prefix'");
  }
  return cfg;
}

py::dict ReportToDict(const MetricsReport& r) {
  py::dict d;
  d["usw_mean"] = r.usw_mean;
  d["nsw"] = r.nsw;
  d["nsw_positive"] = r.nsw_positive;
  d["zero_score_count"] = r.zero_score_count;
  d["min_score"] = r.min_score;
  d["ef1_violations"] = r.ef1_violations;
  d["gini"] = r.gini;
  d["total_envy"] = r.total_envy;
  d["literal_envy_sum"] = r.literal_envy_sum;
  py::list blocks;
  for (const auto& b : r.percentile_blocks) {
    blocks.append(py::make_tuple(b.fraction, b.mean, b.stddev));
  }
  d["percentile_blocks"] = blocks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reviewer Round Robin, greedy order search and fairness metrics.";

  py::register_exception<Error>(m, "RevkitError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::vector<double>>& values,
                       std::vector<int> capacities, int k) {
             return Instance::Create(values, std::move(capacities), k);
           }),
           py::arg("values"), py::arg("capacities"), py::arg("k"))
      .def_property_readonly("n", &Instance::num_papers)
      .def_property_readonly("m", &Instance::num_reviewers)
      .def_property_readonly("k", &Instance::k)
      .def_property_readonly("capacities", &Instance::capacities)
      .def("value", &Instance::value, py::arg("paper"), py::arg("reviewer"))
      .def("__repr__", [](const Instance& inst) {
        return "Instance(n=" + std::to_string(inst.num_papers()) +
               ", m=" + std::to_string(inst.num_reviewers()) +
               ", k=" + std::to_string(inst.k()) + ")";
      });

  py::class_<Allocation>(m, "Allocation")
      .def(py::init([](int n) { return Allocation::Empty(n); }), py::arg("n"))
      .def_readwrite("bundles", &Allocation::bundles)
      .def_readwrite("first_reviewer", &Allocation::first_reviewer)
      .def_readwrite("halted_early", &Allocation::halted_early)
      .def(py::self == py::self);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("order", &SearchResult::order)
      .def_readonly("usw", &SearchResult::usw)
      .def_readonly("per_step_usw", &SearchResult::per_step_usw);

  m.def("bundle_value",
        [](const Instance& inst, int paper, const std::vector<int>& bundle) {
          return BundleValue(inst, paper, bundle);
        },
        py::arg("inst"), py::arg("paper"), py::arg("bundle"));
  m.def("usw", &Usw, py::arg("inst"), py::arg("alloc"));
  m.def("validate_allocation",
        [](const Instance& inst, const Allocation& alloc) {
          std::vector<std::string> out;
          for (const auto& v : ValidateAllocation(inst, alloc)) {
            out.push_back(v.ToString());
          }
          return out;
        },
        py::arg("inst"), py::arg("alloc"));
  m.def("is_complete", &IsComplete, py::arg("inst"), py::arg("alloc"));
  m.def("check_ef1",
        [](const Instance& inst, const Allocation& alloc) {
          return CheckEf1(inst, alloc).violating_pairs;
        },
        py::arg("inst"), py::arg("alloc"),
        "Ordered pairs (i, j) where i envies j beyond one reviewer.");

  m.def("reviewer_round_robin",
        [](const Instance& inst, const std::vector<int>& order,
           bool trace) -> py::object {
          if (!trace) return py::cast(ReviewerRoundRobin(inst, order));
          RrrTrace events;
          Allocation alloc = ReviewerRoundRobin(inst, order, &events);
          return py::make_tuple(std::move(alloc), FormatTrace(events));
        },
        py::arg("inst"), py::arg("order"), py::arg("trace") = false);
  m.def("usw_rrr",
        [](const Instance& inst, const std::vector<int>& order) {
          return UswRrr(inst, order);
        },
        py::arg("inst"), py::arg("order"));
  m.def("naive_round_robin",
        [](const Instance& inst, const std::vector<int>& order) {
          return NaiveRoundRobin(inst, order);
        },
        py::arg("inst"), py::arg("order"));

  m.def("greedy_rrr",
        [](const Instance& inst, std::optional<int> subsample, uint64_t seed,
           int jobs) {
          py::gil_scoped_release release;
          return GreedyRrr(inst, GrrrConfig{subsample, seed, jobs});
        },
        py::arg("inst"), py::arg("subsample") = py::none(),
        py::arg("seed") = 0, py::arg("jobs") = 1);
  m.def("exhaustive_best_order",
        [](const Instance& inst, int max_papers) {
          const OptimalOrder best = ExhaustiveBestOrder(inst, max_papers);
          return py::make_tuple(best.order, best.usw);
        },
        py::arg("inst"), py::arg("max_papers") = kDefaultExhaustiveLimit);
  m.def("check_approximation",
        [](const Instance& inst, const SearchResult& alg, double opt_value,
           double gamma, double alpha) {
          const auto r = CheckApproximation(inst, alg, opt_value, gamma, alpha);
          py::dict d;
          d["f_alg"] = r.f_alg;
          d["f_opt"] = r.f_opt;
          d["ratio"] = r.ratio;
          d["zero_optimum"] = r.zero_optimum;
          d["violated"] = r.violated;
          return d;
        },
        py::arg("inst"), py::arg("alg"), py::arg("opt_value"),
        py::arg("gamma"), py::arg("alpha"));

  m.def("is_independent",
        [](const std::vector<std::pair<int, int>>& ts) {
          return IsIndependent(ToTupleSet(ts));
        },
        py::arg("tuples"), "Tuples are (paper, position) pairs.");
  m.def("set_to_order",
        [](const std::vector<std::pair<int, int>>& ts) {
          return SetToOrder(ToTupleSet(ts));
        },
        py::arg("tuples"));
  m.def("f_value",
        [](const Instance& inst, const std::vector<std::pair<int, int>>& ts,
           double alpha) { return FValue(inst, ToTupleSet(ts), alpha); },
        py::arg("inst"), py::arg("tuples"), py::arg("alpha"));
  m.def("marginal_gain",
        [](const Instance& inst, const std::vector<std::pair<int, int>>& ts,
           std::pair<int, int> e, double alpha) {
          return MarginalGain(inst, ToTupleSet(ts), {e.first, e.second},
                              alpha);
        },
        py::arg("inst"), py::arg("tuples"), py::arg("element"),
        py::arg("alpha"));
  m.def("estimate_alpha",
        [](const Instance& inst, int samples, uint64_t seed,
           std::optional<int> max_prefix, double margin, int jobs) {
          py::gil_scoped_release release;
          return EstimateAlpha(inst, MakeEstimationConfig(samples, seed,
                                                          max_prefix, margin,
                                                          "arbitrary", jobs))
              .alpha;
        },
        py::arg("inst"), py::arg("samples") = 1000, py::arg("seed") = 0,
        py::arg("max_prefix") = py::none(), py::arg("margin") = 0.01,
        py::arg("jobs") = 1);
  m.def("exhaustive_alpha",
        [](const Instance& inst, double margin) {
          return ExhaustiveAlpha(inst, margin).alpha;
        },
        py::arg("inst"), py::arg("margin") = 0.01);
  m.def("estimate_gamma",
        [](const Instance& inst, double alpha, int samples, uint64_t seed,
           std::optional<int> max_prefix, double margin,
           const std::string& sampling, int jobs) {
          const auto cfg = MakeEstimationConfig(samples, seed, max_prefix,
                                                margin, sampling, jobs);
          GammaEstimate g;
          {
            py::gil_scoped_release release;
            g = EstimateGamma(inst, alpha, cfg);
          }
          py::dict d;
          d["gamma"] = g.gamma;
          d["samples"] = g.samples;
          d["valid"] = g.valid;
          d["skipped_zero_gain"] = g.skipped_zero_gain;
          d["max_ratio"] = g.max_ratio;
          return d;
        },
        py::arg("inst"), py::arg("alpha"), py::arg("samples") = 1000,
        py::arg("seed") = 0, py::arg("max_prefix") = py::none(),
        py::arg("margin") = 0.01, py::arg("sampling") = "arbitrary",
        py::arg("jobs") = 1);
  m.def("exhaustive_gamma",
        [](const Instance& inst, double alpha) {
          return ExhaustiveGamma(inst, alpha);
        },
        py::arg("inst"), py::arg("alpha"));

  m.def("full_report",
        [](const Instance& inst, const Allocation& alloc) {
          return ReportToDict(FullReport(inst, alloc));
        },
        py::arg("inst"), py::arg("alloc"));

  m.def("generate_synthetic",
        [](int n, int m_reviewers, int k, int cap_min, int cap_max,
           const std::string& dist, uint64_t seed) {
          SyntheticParams p;
          p.num_papers = n;
          p.num_reviewers = m_reviewers;
          p.k = k;
          p.capacity_min = cap_min;
          p.capacity_max = cap_max;
          p.seed = seed;
          if (dist == "exponential") {
            p.distribution = ValueDistribution::kExponential;
          } else if (dist != "uniform") {
            throw Error(ErrorCode::kInvalidParams,
                        "distribution must be 'uniform' or 'exponential'");
          }
          return GenerateSynthetic(p);
        },
        py::arg("n"), py::arg("m"), py::arg("k"), py::arg("cap_min") = 1,
        py::arg("cap_max") = 1, py::arg("dist") = "uniform",
        py::arg("seed") = 0);
  m.def("load_instance",
        [](const std::string& scores, const std::string& loads, int k,
           bool shift_negative, bool header) {
          return LoadInstance(scores, loads, k,
                              shift_negative ? NegativeHandling::kShiftToZero
                                             : NegativeHandling::kReject,
                              header)
              .instance;
        },
        py::arg("scores"), py::arg("loads"), py::arg("k"),
        py::arg("shift_negative") = false, py::arg("header") = false);
}
