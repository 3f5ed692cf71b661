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

// Classical states and the phase-noise bound they obey.
//
// A classical state is a mixture of coherent states with a nonnegative
// P-function. Here the P-function is a finite set of atoms (weight, alpha),
// so every integral over P becomes a weighted sum. Any such state has
//
//   1 - |<E->|^2 >= 1 / (4 <N> + 1),
//
// and a state below that bound is nonclassical. The converse does not hold:
// number states sit far above the bound.

#ifndef PHASENOISE_CLASSICAL_WITNESS_H_
#define PHASENOISE_CLASSICAL_WITNESS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phasenoise/pure_state.h"
#include "phasenoise/state_factories.h"

namespace phasenoise {

inline constexpr double kWitnessTolerance = 1e-10;
inline constexpr double kEnsembleWeightTolerance = 1e-12;
inline constexpr double kEnsembleFileWeightTolerance = 1e-9;

struct EnsembleComponent {
  double weight = 0.0;
  Complex alpha;

  friend bool operator==(const EnsembleComponent&, const EnsembleComponent&) = default;
};

class CoherentEnsemble {
 public:
  // Requires >= 1 component, positive finite weights summing to 1 within
  // `weight_tolerance`; weights are then rescaled to sum to 1. Throws
  // Error(kDomain).
  explicit CoherentEnsemble(std::vector<EnsembleComponent> components,
                            double weight_tolerance = kEnsembleWeightTolerance);

  static CoherentEnsemble single(Complex alpha) {
    return CoherentEnsemble({{1.0, alpha}});
  }

  std::span<const EnsembleComponent> components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  // sum_k w_k |alpha_k|^2; exact, no truncation involved.
  double mean_n() const;

  friend bool operator==(const CoherentEnsemble&, const CoherentEnsemble&) = default;

 private:
  std::vector<EnsembleComponent> components_;
};

// {"components": [{"weight": w, "alpha": [re, im]}, ...]}
std::string ensemble_to_json(const CoherentEnsemble& ensemble, int significant_digits = 17);
// Weights must sum to 1 within 1e-9; they are renormalized on load.
CoherentEnsemble ensemble_from_json(std::string_view text);
CoherentEnsemble read_ensemble_file(const std::string& path);

struct EnsembleMoments {
  double mean_n = 0.0;
  Complex e_minus;
};

// <alpha|E-|alpha> from the truncated coherent-state series.
Complex coherent_e_minus(Complex alpha, const RealizeDefaults& truncation = {});

// tr(rho A) = sum_k w_k <alpha_k|A|alpha_k> for A = N and A = E-.
EnsembleMoments ensemble_moments(const CoherentEnsemble& ensemble,
                                 const RealizeDefaults& truncation = {});

// 1 / (4 mean_n + 1). Throws Error(kDomain) for negative or non-finite input.
double classical_bound(double mean_n);

// Per-coherent-state ceiling on |<alpha|E-|alpha>| implied by the
// state-free uncertainty relation with (dN)^2 = |alpha|^2:
// f(alpha) = [1 + 1/(4|alpha|^2)]^{-1/2}, with f(0) = 0, so that
// 1 - f^2 = 1 / (1 + 4|alpha|^2).
double coherent_e_minus_ceiling(Complex alpha);

struct WitnessReport {
  double mean_n = 0.0;
  Complex e_minus;
  double phase_noise = 0.0;
  double classical_bound = 1.0;
  double witness = 0.0;  // classical_bound - phase_noise
  bool nonclassical = false;
};

WitnessReport witness(double mean_n, Complex e_minus);
WitnessReport witness(std::span<const Complex> amplitudes);
WitnessReport witness(const CoherentEnsemble& ensemble,
                      const RealizeDefaults& truncation = {});

// Slacks of each inequality in the chain from the per-component ceiling to
// the final bound, evaluated on one ensemble. All are >= 0 in exact
// arithmetic.
struct ChainSlacks {
  // min_k f(alpha_k) - |<alpha_k|E-|alpha_k>|
  double component_ceiling = 0.0;
  // sum_k w_k f(alpha_k) - |<E->|
  double averaged_ceiling = 0.0;
  // sum_k w_k f(alpha_k)^2 - |<E->|^2
  double squared_ceiling = 0.0;
  // sum_k w_k / (1 + 4|alpha_k|^2) - 1 / (1 + 4 <N>)
  double mean_photon_number = 0.0;
  // phase_noise - 1 / (4 <N> + 1)
  double final_bound = 0.0;

  double min() const;
};

ChainSlacks derivation_chain(const CoherentEnsemble& ensemble,
                             const RealizeDefaults& truncation = {});

struct McOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t max_components = 32;
  double max_alpha = 10.0;
  RealizeDefaults truncation;
  unsigned threads = 1;
  bool keep_samples = false;
};

struct McSample {
  std::size_t index = 0;
  CoherentEnsemble ensemble = CoherentEnsemble::single(Complex{});
  WitnessReport report;
  double margin = 0.0;  // phase_noise - classical_bound
  std::string error;
};

struct McSummary {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::size_t failures = 0;
  double min_margin = 0.0;
  std::size_t worst_index = 0;
  CoherentEnsemble worst_case = CoherentEnsemble::single(Complex{});
  std::vector<McSample> per_sample;  // filled when keep_samples
};

// Draws ensemble i from stream i: component count uniform in
// [1, max_components], weights flat on the simplex, alphas uniform on the
// disk |alpha| <= max_alpha.
CoherentEnsemble draw_ensemble(std::uint64_t seed, std::uint64_t index,
                               std::size_t max_components, double max_alpha);

// Ties in min_margin go to the lowest sample index.
McSummary mc_verify_classical(const McOptions& options);

}  // namespace phasenoise

#endif  // PHASENOISE_CLASSICAL_WITNESS_H_
