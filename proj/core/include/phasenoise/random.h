// Copyright 2026 The phasenoise Authors
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

#ifndef PHASENOISE_RANDOM_H_
#define PHASENOISE_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace phasenoise {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based stream: draw k of stream s under master seed m is a pure
// function of (m, s, k). Sample i of a Monte Carlo run uses stream i, so
// results do not depend on evaluation order or thread count. All
// transformations to floating point are spelled out here rather than
// delegated to <random> distributions, whose output is not portable.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream ^ 0xD1B54A32D192ED03ull))) {}

  std::uint64_t next() { return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }

  // Uniform integer in [lo, hi] (inclusive). Modulo bias is below 2^-40 for
  // the small ranges used here.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

  // Standard normal via Box-Muller (one value per two uniforms).
  double normal() {
    const double u = uniform_open_zero();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace phasenoise

#endif  // PHASENOISE_RANDOM_H_
