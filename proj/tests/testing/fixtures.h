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

#ifndef REVKIT_TESTS_TESTING_FIXTURES_H_
#define REVKIT_TESTS_TESTING_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "revkit/instance.h"

namespace revkit::testing {

// Three papers, six unit-capacity reviewers, two reviewers per paper.
inline Instance InstA() {
  return Instance::Create({{9, 3, 5, 9, 4, 4},
                           {10, 4, 0, 10, 6, 5},
                           {1, 1, 2, 2, 4, 4}},
                          std::vector<int>(6, 1), 2);
}

// Four papers, six reviewers of capacity two, three reviewers per paper.
inline Instance InstB(double eps = 0.001) {
  return Instance::Create({{2, 0, 0, 1, 0.5, eps},
                           {3, 1, 2, 10, 0, 0},
                           {0, eps, 0, 10, 1, 0},
                           {2, 1, 3, 10, 0, eps}},
                          std::vector<int>(6, 2), 3);
}

// Builds an allocation from 1-based reviewer ids per paper. first_reviewer
// is left unset.
inline Allocation FromOneBased(const std::vector<std::vector<int>>& bundles) {
  Allocation alloc = Allocation::Empty(static_cast<int>(bundles.size()));
  for (size_t i = 0; i < bundles.size(); ++i) {
    for (int r : bundles[i]) alloc.bundles[i].push_back(r - 1);
    std::sort(alloc.bundles[i].begin(), alloc.bundles[i].end());
  }
  return alloc;
}

inline Order OneBasedOrder(std::initializer_list<int> ids) {
  Order order;
  for (int id : ids) order.push_back(id - 1);
  return order;
}

struct RandomShape {
  int max_papers = 10;
  int max_reviewers = 30;
  int max_k = 4;
  int max_capacity = 3;
};

// Random instance for property tests. Values mix zeros, small integers
// (to provoke ties) and continuous draws.
inline Instance RandomInstance(std::mt19937_64& gen,
                               const RandomShape& shape = {}) {
  std::uniform_int_distribution<int> papers(1, shape.max_papers);
  std::uniform_int_distribution<int> reviewers(1, shape.max_reviewers);
  const int n = papers(gen);
  const int m = reviewers(gen);
  const int k = std::uniform_int_distribution<int>(
      1, std::min(shape.max_k, m))(gen);
  std::uniform_int_distribution<int> cap(1, shape.max_capacity);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> small(0, 5);
  std::uniform_real_distribution<double> cont(0.0, 1.0);
  std::vector<double> values(static_cast<size_t>(n) * m);
  for (double& v : values) {
    switch (kind(gen)) {
      case 0: v = 0.0; break;
      case 1: v = small(gen); break;
      default: v = cont(gen); break;
    }
  }
  std::vector<int> caps(m);
  for (int& c : caps) c = cap(gen);
  return Instance::Create(n, m, std::move(values), std::move(caps), k);
}

// Instance with m >= k * n.
inline Instance RandomAmpleInstance(std::mt19937_64& gen, int max_papers = 8,
                                    int max_k = 4) {
  const int n = std::uniform_int_distribution<int>(1, max_papers)(gen);
  const int k = std::uniform_int_distribution<int>(1, max_k)(gen);
  const int m = k * n + std::uniform_int_distribution<int>(0, 6)(gen);
  std::uniform_real_distribution<double> cont(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<double> values(static_cast<size_t>(n) * m);
  for (double& v : values) v = coin(gen) == 0 ? 0.0 : cont(gen);
  std::vector<int> caps(m);
  std::uniform_int_distribution<int> cap(1, 3);
  for (int& c : caps) c = cap(gen);
  return Instance::Create(n, m, std::move(values), std::move(caps), k);
}

// Fixed-shape instance: n papers, m reviewers, uniform integer scores in
// [0, 10], capacities in [1, max_capacity].
inline Instance RandomFixedInstance(std::mt19937_64& gen, int n, int m, int k,
                                    int max_capacity) {
  std::uniform_int_distribution<int> score(0, 10);
  std::uniform_int_distribution<int> cap(1, max_capacity);
  std::vector<double> values(static_cast<size_t>(n) * m);
  for (double& v : values) v = score(gen);
  std::vector<int> caps(m);
  for (int& c : caps) c = cap(gen);
  return Instance::Create(n, m, std::move(values), std::move(caps), k);
}

inline Order RandomFullOrder(std::mt19937_64& gen, int n) {
  Order order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), gen);
  return order;
}

}  // namespace revkit::testing

#endif  // REVKIT_TESTS_TESTING_FIXTURES_H_
