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

// Minimum phase noise at fixed mean photon number.
//
// Minimizing 1 - |<E->|^2 at fixed <N> means maximizing |sum_n c_n^* c_{n+1}|
// subject to sum |c_n|^2 = 1 and sum n |c_n|^2 = target. Replacing every
// amplitude by its modulus leaves the number distribution unchanged and can
// only increase |sum c_n^* c_{n+1}| (triangle inequality), so the optimum is
// attained on real nonnegative amplitudes and no phase search is needed.
//
// On real vectors the Lagrange condition is the tridiagonal eigenproblem
//
//   T(mu) v = lambda v,   T(mu)_{n,n} = -mu n,   T(mu)_{n,n+1} = 1/2,
//
// solved by the top (Perron, entrywise positive) eigenvector. <N>(mu) along
// that branch is continuous and decreasing in mu, from dim-1 as mu -> -inf
// through (dim-1)/2 at mu = 0 down to 0 as mu -> +inf, so mu is found by
// bisection.

#ifndef PHASENOISE_EXTREMAL_H_
#define PHASENOISE_EXTREMAL_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phasenoise/pure_state.h"
#include "phasenoise/tridiagonal.h"

namespace phasenoise {

inline constexpr double kDegenerateGap = 1e-12;
inline constexpr double kTruncationSuspectAmplitude = 1e-8;

struct ExtremalOptions {
  // Stop when |<N> - target| <= tol * max(1, target). Must be >= 1e-12.
  double tol = 1e-10;
  int max_bisections = 200;
  int max_eigen_iterations = 100000;
  unsigned threads = 1;  // sweep_extremal only
};

struct ExtremalResult {
  double target_n = 0.0;
  // Lagrange multiplier; +inf for the vacuum and -inf for |dim-1>, which are
  // only reached in the limit.
  double mu = 0.0;
  PureState state;
  double mean_n = 0.0;
  double phase_noise = 1.0;
  double eigenvalue = 0.0;
  double eigen_residual = 0.0;       // ||T(mu) v - lambda v||_inf
  double constraint_residual = 0.0;  // |<N> - target_n|
  int iterations = 0;                // bisection steps on mu
  bool degenerate = false;           // top eigenvalue gap below 1e-12
  bool truncation_suspect = false;   // top amplitude above 1e-8
  std::vector<std::pair<double, double>> trace;  // (mu, <N>) per evaluation
};

SymmetricTridiagonal lagrange_matrix(double mu, std::size_t dim);

// Throws Error(kBisectionFailure) when target_n lies outside [0, dim-1] or no
// bracket can be built, Error(kConvergenceFailure) when bisection runs out of
// steps or <N>(mu) is seen to increase.
ExtremalResult minimize_phase_noise(double target_n, std::size_t dim,
                                    const ExtremalOptions& options = {});

struct ExtremalSweepPoint {
  double target_n = 0.0;
  std::optional<ExtremalResult> result;
  double scaled_noise = 0.0;  // phase_noise * target_n^2
  std::string error;
};

// One point per target, in input order; per-point failures are recorded.
std::vector<ExtremalSweepPoint> sweep_extremal(std::span<const double> targets,
                                               std::size_t dim,
                                               const ExtremalOptions& options = {});

}  // namespace phasenoise

#endif  // PHASENOISE_EXTREMAL_H_
