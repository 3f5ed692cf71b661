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

// Randomized self-check of every identity and inequality the library relies
// on. Each check reports the largest violation seen (0 when every sample
// satisfies it exactly) against a fixed tolerance.

#ifndef PHASENOISE_VERIFY_IDENTITIES_H_
#define PHASENOISE_VERIFY_IDENTITIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "phasenoise/pure_state.h"
#include "phasenoise/random.h"
#include "phasenoise/state_factories.h"

namespace phasenoise {

// Complex standard normal amplitudes, normalized: Haar-uniform on the unit
// sphere of C^dim.
PureState haar_random_state(CounterRng& rng, std::size_t dim);

struct IdentityCheck {
  std::string name;
  std::size_t samples = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct VerifyOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t min_dim = 2;
  std::size_t max_dim = 64;
  // Ensemble chain checks run on every `ensemble_stride`-th trial.
  std::size_t ensemble_stride = 10;
  std::size_t ensemble_max_components = 8;
  double ensemble_max_alpha = 6.0;
  RealizeDefaults truncation;
  unsigned threads = 1;
  // Test hook: evaluates the (dC)^2 + (dS)^2 identity with a flipped sign on
  // the P0 term, so the checker itself can be shown to fail.
  bool corrupt_variance_identity = false;
};

struct VerifyReport {
  std::vector<IdentityCheck> checks;
  bool passed = true;
};

VerifyReport verify_identities(const VerifyOptions& options);

}  // namespace phasenoise

#endif  // PHASENOISE_VERIFY_IDENTITIES_H_
