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

// Portable, versioned random source ("revkit-rng v1").
//
// Generator: xoshiro256** with its four state words filled by successive
// splitmix64 outputs of the seed. Derived draws are defined here rather than
// through <random> distributions, whose algorithms differ between standard
// libraries:
//   UniformIndex(b)  rejection sampling on the top bits (unbiased),
//   UniformDouble()  (x >> 11) * 2^-53, in [0, 1),
//   Exponential()    -log1p(-UniformDouble()).
// Any change to these definitions must bump kRngVersion.

#ifndef REVKIT_RNG_H_
#define REVKIT_RNG_H_

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace revkit {

inline constexpr int kRngVersion = 1;

class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) word = SplitMix64(x);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<uint64_t>::max();
  }

  result_type operator()() { return Next(); }

  uint64_t Next() {
    const uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound). bound must be positive.
  uint64_t UniformIndex(uint64_t bound) {
    if (bound <= 1) return 0;
    const int shift = std::countl_zero(bound - 1);
    while (true) {
      const uint64_t candidate = shift == 64 ? 0 : Next() >> shift;
      if (candidate < bound) return candidate;
    }
  }

  double UniformDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  double Exponential() { return -std::log1p(-UniformDouble()); }

  // Moves a uniform sample of `count` elements (without replacement) to the
  // front of `items` by partial Fisher-Yates.
  template <typename T>
  void PartialShuffle(std::span<T> items, size_t count) {
    for (size_t i = 0; i < count && i + 1 < items.size(); ++i) {
      const size_t j = i + UniformIndex(items.size() - i);
      std::swap(items[i], items[j]);
    }
  }

 private:
  static uint64_t SplitMix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_[4];
};

}  // namespace revkit

#endif  // REVKIT_RNG_H_
