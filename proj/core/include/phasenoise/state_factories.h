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

// State families and the textual spec language used to name them.
//
//   spec   := family ':' params
//   params := key '=' value { ',' key '=' value }
//   value  := int | float | complex | path
//
// Families and their keys:
//
//   number:n=5[,dim=8]          |n>, dim defaults to n+1
//   coherent:alpha=2+1i         |alpha>, dimension chosen from the tail mass
//   tps:n0=10[,theta=0.3]       truncated phase state (alias truncated_phase)
//   triangle:n0=100             triangular profile peaked at n0/2, n0 even
//   file:states/x.json          state document (or file:path="...")
//   raw:amps=1;0.5i;-0.25       explicit amplitudes, canonicalized
//
// Complex literals are `a`, `bi`, `a+bi` or `a-bi`.

#ifndef PHASENOISE_STATE_FACTORIES_H_
#define PHASENOISE_STATE_FACTORIES_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "phasenoise/pure_state.h"

namespace phasenoise {

inline constexpr double kDefaultTailTolerance = 1e-14;
inline constexpr std::size_t kDefaultMaxDim = 4096;

PureState number_state(std::int64_t n, std::size_t dim);

// Amplitudes alpha^n / sqrt(n!) e^{-|alpha|^2/2}, truncated at the smallest
// dim <= max_dim whose discarded tail probability is below tail_tol, then
// renormalized. Throws Error(kDimExhausted) if max_dim is not enough.
PureState coherent_state(Complex alpha, double tail_tol = kDefaultTailTolerance,
                         std::size_t max_dim = kDefaultMaxDim);

// (n0+1)^{-1/2} sum_{n<=n0} e^{i n theta} |n>.
PureState truncated_phase_state(double theta, std::int64_t n0);

// Weights n up to n0/2 and n0-n beyond, normalized by
// 2 sqrt(3) / sqrt(n0 (n0^2 + 2)). Requires n0 even; n0 = 2 gives |1>.
PureState triangle_state(std::int64_t n0);

enum class Family { kNumber, kCoherent, kTruncatedPhase, kTriangle, kFile, kRaw };

std::string_view to_string(Family family);

struct StateSpec {
  Family family = Family::kNumber;
  std::int64_t n = 0;
  std::int64_t dim = 0;  // number family only; 0 means n+1
  Complex alpha;
  std::int64_t n0 = 0;
  double theta = 0.0;
  std::string path;
  Amplitudes amplitudes;

  friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

// Throws ParseError with kind kParse, kUnknownFamily, kMissingParam or
// kBadValue. Parameter ranges (n >= 0, n0 parity, ...) are validated here.
StateSpec parse_spec(std::string_view text);

// Canonical text form; parse_spec(to_string(s)) == s for valid specs.
std::string to_string(const StateSpec& spec);

// Parses `a`, `bi`, `a+bi`, `a-bi`. Throws Error(kBadValue).
Complex parse_complex(std::string_view text);
std::string format_complex(Complex value);

struct RealizeDefaults {
  double tail_tol = kDefaultTailTolerance;
  std::size_t max_dim = kDefaultMaxDim;
};

PureState realize(const StateSpec& spec, const RealizeDefaults& defaults = {});

}  // namespace phasenoise

#endif  // PHASENOISE_STATE_FACTORIES_H_
