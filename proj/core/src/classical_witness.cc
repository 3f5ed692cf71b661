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

#include "phasenoise/classical_witness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"
#include "parallel.h"
#include "phasenoise/errors.h"
#include "phasenoise/number_format.h"
#include "phasenoise/phase_noise.h"
#include "phasenoise/random.h"
#include "phasenoise/state_io.h"
#include "phasenoise/summation.h"

namespace phasenoise {

CoherentEnsemble::CoherentEnsemble(std::vector<EnsembleComponent> components,
                                   double weight_tolerance)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorKind::kDomain, "an ensemble needs at least one component");
  }
  CompensatedSum total;
  for (const EnsembleComponent& c : components_) {
    if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
      throw Error(ErrorKind::kDomain, "ensemble weights must be positive and finite");
    }
    if (!std::isfinite(c.alpha.real()) || !std::isfinite(c.alpha.imag())) {
      throw Error(ErrorKind::kDomain, "ensemble alphas must be finite");
    }
    total.add(c.weight);
  }
  const double sum = total.value();
  if (!(std::abs(sum - 1.0) <= weight_tolerance)) {
    throw Error(ErrorKind::kDomain,
                "ensemble weights sum to " + format_real(sum) + ", not 1");
  }
  if (sum != 1.0) {
    for (EnsembleComponent& c : components_) c.weight /= sum;
  }
}

double CoherentEnsemble::mean_n() const {
  CompensatedSum sum;
  for (const EnsembleComponent& c : components_) sum.add(c.weight * std::norm(c.alpha));
  return sum.value();
}

std::string ensemble_to_json(const CoherentEnsemble& ensemble, int significant_digits) {
  std::string out = "{\"components\": [";
  bool first = true;
  for (const EnsembleComponent& c : ensemble.components()) {
    if (!first) out += ", ";
    first = false;
    out += "{\"weight\": " + format_real(c.weight, significant_digits) + ", \"alpha\": [" +
           format_real(c.alpha.real(), significant_digits) + ", " +
           format_real(c.alpha.imag(), significant_digits) + "]}";
  }
  out += "]}\n";
  return out;
}

CoherentEnsemble ensemble_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array()) {
    throw Error(ErrorKind::kFormat, "ensemble document needs a \"components\" array");
  }
  std::vector<EnsembleComponent> components;
  for (const json& item : doc["components"]) {
    if (!item.is_object() || !item.contains("weight") || !item.contains("alpha") ||
        !item["weight"].is_number() || !item["alpha"].is_array() ||
        item["alpha"].size() != 2 || !item["alpha"][0].is_number() ||
        !item["alpha"][1].is_number()) {
      throw Error(ErrorKind::kFormat,
                  "each component must be {\"weight\": w, \"alpha\": [re, im]}");
    }
    components.push_back({item["weight"].get<double>(),
                          Complex{item["alpha"][0].get<double>(),
                                  item["alpha"][1].get<double>()}});
  }
  return CoherentEnsemble(std::move(components), kEnsembleFileWeightTolerance);
}

CoherentEnsemble read_ensemble_file(const std::string& path) {
  return ensemble_from_json(read_text_file(path));
}

Complex coherent_e_minus(Complex alpha, const RealizeDefaults& truncation) {
  return moments(coherent_state(alpha, truncation.tail_tol, truncation.max_dim)).e_minus;
}

EnsembleMoments ensemble_moments(const CoherentEnsemble& ensemble,
                                 const RealizeDefaults& truncation) {
  CompensatedComplexSum e_minus;
  for (const EnsembleComponent& c : ensemble.components()) {
    e_minus.add(c.weight * coherent_e_minus(c.alpha, truncation));
  }
  return {ensemble.mean_n(), e_minus.value()};
}

double classical_bound(double mean_n) {
  if (!(mean_n >= 0.0) || !std::isfinite(mean_n)) {
    throw Error(ErrorKind::kDomain, "mean photon number must be finite and >= 0");
  }
  return 1.0 / (4.0 * mean_n + 1.0);
}

double coherent_e_minus_ceiling(Complex alpha) {
  const double r2 = std::norm(alpha);
  if (r2 == 0.0) return 0.0;
  return 1.0 / std::sqrt(1.0 + 1.0 / (4.0 * r2));
}

WitnessReport witness(double mean_n, Complex e_minus) {
  WitnessReport r;
  r.mean_n = mean_n;
  r.e_minus = e_minus;
  r.phase_noise = 1.0 - std::norm(e_minus);
  r.classical_bound = classical_bound(mean_n);
  r.witness = r.classical_bound - r.phase_noise;
  r.nonclassical = r.witness > kWitnessTolerance;
  return r;
}

WitnessReport witness(std::span<const Complex> amplitudes) {
  const Moments m = moments(amplitudes);
  return witness(m.mean_n, m.e_minus);
}

WitnessReport witness(const CoherentEnsemble& ensemble, const RealizeDefaults& truncation) {
  const EnsembleMoments m = ensemble_moments(ensemble, truncation);
  return witness(m.mean_n, m.e_minus);
}

double ChainSlacks::min() const {
  return std::min({component_ceiling, averaged_ceiling, squared_ceiling, mean_photon_number,
                   final_bound});
}

ChainSlacks derivation_chain(const CoherentEnsemble& ensemble,
                             const RealizeDefaults& truncation) {
  ChainSlacks s;
  s.component_ceiling = std::numeric_limits<double>::infinity();
  CompensatedComplexSum e_minus;
  CompensatedSum f_mean, f2_mean, loose;
  for (const EnsembleComponent& c : ensemble.components()) {
    const Complex e = coherent_e_minus(c.alpha, truncation);
    const double f = coherent_e_minus_ceiling(c.alpha);
    const double r2 = std::norm(c.alpha);
    s.component_ceiling = std::min(s.component_ceiling, f - std::abs(e));
    e_minus.add(c.weight * e);
    f_mean.add(c.weight * f);
    f2_mean.add(c.weight * f * f);
    loose.add(c.weight / (1.0 + 4.0 * r2));
  }
  const double mean_n = ensemble.mean_n();
  const double abs_e = std::abs(e_minus.value());
  const double bound = classical_bound(mean_n);
  s.averaged_ceiling = f_mean.value() - abs_e;
  s.squared_ceiling = f2_mean.value() - abs_e * abs_e;
  s.mean_photon_number = loose.value() - bound;
  s.final_bound = (1.0 - abs_e * abs_e) - bound;
  return s;
}

CoherentEnsemble draw_ensemble(std::uint64_t seed, std::uint64_t index,
                               std::size_t max_components, double max_alpha) {
  CounterRng rng(seed, index);
  const auto count = static_cast<std::size_t>(rng.uniform_int(1, max_components));
  // Normalized exponentials are uniform on the simplex.
  std::vector<double> raw(count);
  CompensatedSum total;
  for (double& w : raw) {
    w = -std::log(rng.uniform_open_zero());
    total.add(w);
  }
  std::vector<EnsembleComponent> components(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double radius = max_alpha * std::sqrt(rng.uniform());
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    // Guard against a zero weight from an exact 1.0 draw.
    components[k].weight = std::max(raw[k], 1e-300) / total.value();
    components[k].alpha = std::polar(radius, angle);
  }
  return CoherentEnsemble(std::move(components), 1e-9);
}

McSummary mc_verify_classical(const McOptions& options) {
  if (options.samples < 1) throw Error(ErrorKind::kDomain, "samples must be >= 1");
  if (options.max_components < 1) {
    throw Error(ErrorKind::kDomain, "max_components must be >= 1");
  }
  if (!(options.max_alpha >= 0.0) || !std::isfinite(options.max_alpha)) {
    throw Error(ErrorKind::kDomain, "max_alpha must be finite and >= 0");
  }

  std::vector<McSample> samples(options.samples);
  internal::parallel_for(options.samples, options.threads, [&](std::size_t i) {
    McSample& s = samples[i];
    s.index = i;
    try {
      s.ensemble = draw_ensemble(options.seed, i, options.max_components, options.max_alpha);
      s.report = witness(s.ensemble, options.truncation);
      s.margin = s.report.phase_noise - s.report.classical_bound;
    } catch (const Error& e) {
      s.error = e.what();
    }
  });

  // Fixed-order reduction.
  McSummary summary;
  summary.samples = options.samples;
  summary.min_margin = std::numeric_limits<double>::infinity();
  bool have_worst = false;
  for (const McSample& s : samples) {
    if (!s.error.empty()) {
      ++summary.failures;
      continue;
    }
    if (s.report.nonclassical) ++summary.violations;
    if (!have_worst || s.margin < summary.min_margin) {
      summary.min_margin = s.margin;
      summary.worst_index = s.index;
      summary.worst_case = s.ensemble;
      have_worst = true;
    }
  }
  if (options.keep_samples) summary.per_sample = std::move(samples);
  return summary;
}

}  // namespace phasenoise
