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

#include "phasenoise/verify_identities.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "parallel.h"
#include "phasenoise/classical_witness.h"
#include "phasenoise/errors.h"
#include "phasenoise/phase_noise.h"

namespace phasenoise {

PureState haar_random_state(CounterRng& rng, std::size_t dim) {
  Amplitudes amplitudes(dim);
  for (Complex& c : amplitudes) {
    const double re = rng.normal();
    const double im = rng.normal();
    c = Complex{re, im};
  }
  return canonicalize(amplitudes);
}

namespace {

enum Check : std::size_t {
  kExpectationsReal,
  kShiftSquareSplit,
  kShiftInversion,
  kVarianceSum,
  kShiftBound,
  kRobertsonCos,
  kRobertsonSin,
  kCombinedRelation,
  kStateFreeRelation,
  kCombinedIsTighter,
  kLoweringAfterRaising,
  kRaisingAfterLowering,
  kNumberStateEquality,
  kCoherentCeiling,
  kAveragedCeiling,
  kSquaredCeiling,
  kPhotonNumberAverage,
  kClassicalBound,
  kCheckCount,
};

struct CheckSpec {
  const char* name;
  double tolerance;
};

constexpr CheckSpec kSpecs[kCheckCount] = {
    {"expectations_real", 1e-12},
    {"shift_square_split", 1e-12},
    {"shift_inversion", 1e-12},
    {"variance_sum_identity", 1e-12},
    {"shift_expectation_bound", 1e-12},
    {"robertson_cos", kSlackTolerance},
    {"robertson_sin", kSlackTolerance},
    {"combined_relation", kSlackTolerance},
    {"state_free_relation", kSlackTolerance},
    {"combined_is_tighter", 1e-12},
    {"lowering_after_raising", 1e-15},
    {"raising_after_lowering_norm", 1e-12},
    {"number_state_equality", 1e-12},
    {"coherent_ceiling", kSlackTolerance},
    {"averaged_ceiling", kSlackTolerance},
    {"squared_ceiling", kSlackTolerance},
    {"photon_number_average", kSlackTolerance},
    {"classical_bound", kSlackTolerance},
};

struct TrialResult {
  double violation[kCheckCount] = {};
  bool sampled[kCheckCount] = {};
  std::string error;

  void record(Check c, double v) {
    sampled[c] = true;
    violation[c] = std::max(violation[c], v);
  }
};

void check_random_state(const PureState& psi, bool corrupt, TrialResult& out) {
  const NoiseReport r = report(psi);
  const Moments& m = r.moments;
  const double e2 = std::norm(m.e_minus);

  out.record(kExpectationsReal, std::max(std::abs(m.c_mean.imag()), std::abs(m.s_mean.imag())));
  out.record(kShiftSquareSplit,
             std::abs(e2 - (m.c_mean.real() * m.c_mean.real() +
                            m.s_mean.real() * m.s_mean.real())));
  out.record(kShiftInversion, std::abs(m.e_minus - (m.c_mean + Complex{0.0, 1.0} * m.s_mean)));
  const double p0_term = corrupt ? -0.5 * m.p0 : 0.5 * m.p0;
  out.record(kVarianceSum, std::abs(m.c_var + m.s_var - (1.0 - p0_term - e2)));
  out.record(kShiftBound, std::max(0.0, std::abs(m.e_minus) - 1.0));
  out.record(kRobertsonCos, std::max(0.0, -r.cs_slacks.first));
  out.record(kRobertsonSin, std::max(0.0, -r.cs_slacks.second));
  out.record(kCombinedRelation, std::max(0.0, -r.slack_eq7));
  out.record(kStateFreeRelation, std::max(0.0, -r.slack_eq8));
  out.record(kCombinedIsTighter, std::max(0.0, r.slack_eq7 - r.slack_eq8));

  // Shift-operator algebra on a copy with an empty top level, so E+ loses
  // nothing.
  Amplitudes padded(psi.amplitudes().begin(), psi.amplitudes().end());
  padded.push_back(Complex{});
  const RaisedAmplitudes raised = apply_e_plus(padded);
  const Amplitudes round_trip = apply_e_minus(raised.amplitudes);
  double worst = 0.0;
  for (std::size_t n = 0; n < padded.size(); ++n) {
    worst = std::max(worst, std::abs(round_trip[n] - padded[n]));
  }
  out.record(kLoweringAfterRaising, worst);
  const RaisedAmplitudes lowered_raised = apply_e_plus(apply_e_minus(padded));
  out.record(kRaisingAfterLowering,
             std::abs(norm_squared(lowered_raised.amplitudes) - (1.0 - m.p0)));
}

void check_ensemble(const CoherentEnsemble& ensemble, const RealizeDefaults& truncation,
                    TrialResult& out) {
  const ChainSlacks s = derivation_chain(ensemble, truncation);
  out.record(kCoherentCeiling, std::max(0.0, -s.component_ceiling));
  out.record(kAveragedCeiling, std::max(0.0, -s.averaged_ceiling));
  out.record(kSquaredCeiling, std::max(0.0, -s.squared_ceiling));
  out.record(kPhotonNumberAverage, std::max(0.0, -s.mean_photon_number));
  out.record(kClassicalBound, std::max(0.0, -s.final_bound));
}

}  // namespace

VerifyReport verify_identities(const VerifyOptions& options) {
  if (options.trials < 1) throw Error(ErrorKind::kDomain, "trials must be >= 1");
  if (options.min_dim < 1 || options.max_dim < options.min_dim) {
    throw Error(ErrorKind::kDomain, "bad dimension range for random states");
  }
  const std::size_t stride = std::max<std::size_t>(1, options.ensemble_stride);

  std::vector<TrialResult> trials(options.trials);
  internal::parallel_for(options.trials, options.threads, [&](std::size_t t) {
    TrialResult& out = trials[t];
    try {
      CounterRng rng(options.seed, t);
      const auto dim = static_cast<std::size_t>(rng.uniform_int(options.min_dim, options.max_dim));
      check_random_state(haar_random_state(rng, dim), options.corrupt_variance_identity, out);

      const auto n = static_cast<std::int64_t>(t % 51);
      const NoiseReport number = report(number_state(n, static_cast<std::size_t>(n) + 1));
      out.record(kNumberStateEquality, std::abs(number.slack_eq8));

      if (t % stride == 0) {
        const CoherentEnsemble ensemble =
            draw_ensemble(options.seed ^ 0xC1A55ull, t, options.ensemble_max_components,
                          options.ensemble_max_alpha);
        check_ensemble(ensemble, options.truncation, out);
      }
    } catch (const Error& e) {
      out.error = e.what();
    }
  });

  VerifyReport report;
  report.checks.resize(kCheckCount);
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    report.checks[c].name = kSpecs[c].name;
    report.checks[c].tolerance = kSpecs[c].tolerance;
  }
  for (const TrialResult& t : trials) {
    if (!t.error.empty()) {
      report.passed = false;
      continue;
    }
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      if (!t.sampled[c]) continue;
      ++report.checks[c].samples;
      report.checks[c].max_violation = std::max(report.checks[c].max_violation, t.violation[c]);
    }
  }
  for (IdentityCheck& check : report.checks) {
    check.passed = check.samples > 0 && check.max_violation <= check.tolerance;
    report.passed = report.passed && check.passed;
  }
  return report;
}

}  // namespace phasenoise
