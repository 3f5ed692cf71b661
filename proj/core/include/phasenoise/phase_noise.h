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

// Phase noise 1 - |<E->|^2 and the number-phase uncertainty relations.
//
// With V = (dN)^2 and P = 1 - |<E->|^2, the report carries
//
//   Robertson pair:   V (dC)^2 >= |<S>|^2 / 4,   V (dS)^2 >= |<C>|^2 / 4
//   combined:         (V + 1/4) P >= 1/4 + <P0> V / 2
//   state-free:       (V + 1/4) P >= 1/4
//
// as signed slacks (lhs - rhs). All three are nonnegative for every state;
// number states saturate the state-free form.

#ifndef PHASENOISE_PHASE_NOISE_H_
#define PHASENOISE_PHASE_NOISE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phasenoise/pure_state.h"
#include "phasenoise/state_factories.h"

namespace phasenoise {

// Inequality slacks below -kSlackTolerance count as violations.
inline constexpr double kSlackTolerance = 1e-10;

struct NoiseReport {
  Moments moments;
  double phase_noise = 0.0;
  double lhs_eq8 = 0.0;  // (V + 1/4) P
  double rhs_eq8 = 0.25;
  double rhs_eq7 = 0.0;  // 1/4 + <P0> V / 2
  double slack_eq8 = 0.0;
  double slack_eq7 = 0.0;
  std::pair<double, double> cs_slacks;
};

double phase_noise(const Moments& m);
double phase_noise(std::span<const Complex> amplitudes);

NoiseReport report(const Moments& m);
NoiseReport report(std::span<const Complex> amplitudes);

// Inclusive parameter grid written `start:step:end` (or a single value).
// The end point must be hit exactly by start + k * step.
struct ParameterRange {
  std::vector<double> values;
  bool integral = false;
};

// Throws Error(kBadValue) on malformed or inconsistent ranges.
ParameterRange parse_range(std::string_view text);

struct SweepPoint {
  double parameter = 0.0;
  std::optional<NoiseReport> report;
  std::string error;  // set when the state could not be realized
};

// Replaces one parameter of `spec` ("n", "n0", "theta" or "alpha") by a
// sweep value. Throws Error(kBadValue) if the key does not belong to the
// family or an integral key gets a fractional value.
StateSpec with_parameter(const StateSpec& spec, std::string_view key, double value);

// One report per value, in the order given. Per-point failures are recorded
// in SweepPoint::error. `threads` = 0 uses the hardware concurrency; output
// is identical for every thread count.
std::vector<SweepPoint> sweep(const StateSpec& base, std::string_view key,
                              std::span<const double> values,
                              const RealizeDefaults& defaults = {},
                              unsigned threads = 1);

}  // namespace phasenoise

#endif  // PHASENOISE_PHASE_NOISE_H_
