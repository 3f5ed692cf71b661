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

#include "phasenoise/phase_noise.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

#include "parallel.h"
#include "phasenoise/errors.h"
#include "phasenoise/number_format.h"

namespace phasenoise {

double phase_noise(const Moments& m) { return 1.0 - std::norm(m.e_minus); }

double phase_noise(std::span<const Complex> amplitudes) {
  return phase_noise(moments(amplitudes));
}

NoiseReport report(const Moments& m) {
  NoiseReport r;
  r.moments = m;
  r.phase_noise = phase_noise(m);
  const double v = m.var_n;
  r.lhs_eq8 = (v + 0.25) * r.phase_noise;
  r.rhs_eq8 = 0.25;
  r.rhs_eq7 = 0.25 + 0.5 * m.p0 * v;
  r.slack_eq8 = r.lhs_eq8 - r.rhs_eq8;
  r.slack_eq7 = r.lhs_eq8 - r.rhs_eq7;
  r.cs_slacks = {v * m.c_var - std::norm(m.s_mean) / 4.0,
                 v * m.s_var - std::norm(m.c_mean) / 4.0};
  return r;
}

NoiseReport report(std::span<const Complex> amplitudes) {
  return report(moments(amplitudes));
}

namespace {

bool parse_integer(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_real(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(out);
}

[[noreturn]] void bad_range(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::kBadValue, "bad range '" + std::string(text) + "': " + why);
}

bool is_sweep_key(Family f, std::string_view key) {
  return (key == "n" && f == Family::kNumber) ||
         (key == "n0" && (f == Family::kTruncatedPhase || f == Family::kTriangle)) ||
         (key == "theta" && f == Family::kTruncatedPhase) ||
         (key == "alpha" && f == Family::kCoherent);
}

}  // namespace

ParameterRange parse_range(std::string_view text) {
  ParameterRange range;
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos
                                           ? std::string_view::npos
                                           : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 1 && parts.size() != 3) {
    bad_range(text, "expected 'value' or 'start:step:end'");
  }

  std::int64_t ints[3] = {0, 0, 0};
  bool integral = true;
  for (std::size_t k = 0; k < parts.size(); ++k) integral &= parse_integer(parts[k], ints[k]);
  if (integral) {
    range.integral = true;
    if (parts.size() == 1) {
      range.values.push_back(static_cast<double>(ints[0]));
      return range;
    }
    const auto [first, step, last] = std::tuple{ints[0], ints[1], ints[2]};
    if (step <= 0) bad_range(text, "step must be positive");
    if (last < first) bad_range(text, "end must not precede start");
    if ((last - first) % step != 0) {
      bad_range(text, "end is not reached exactly from start in steps of " +
                          std::to_string(step));
    }
    for (std::int64_t v = first; v <= last; v += step) {
      range.values.push_back(static_cast<double>(v));
    }
    return range;
  }

  double reals[3] = {0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parse_real(parts[k], reals[k])) {
      bad_range(text, "'" + std::string(parts[k]) + "' is not a number");
    }
  }
  if (parts.size() == 1) {
    range.values.push_back(reals[0]);
    return range;
  }
  const auto [first, step, last] = std::tuple{reals[0], reals[1], reals[2]};
  if (!(step > 0.0)) bad_range(text, "step must be positive");
  if (last < first) bad_range(text, "end must not precede start");
  const double steps = (last - first) / step;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, rounded)) {
    bad_range(text, "end is not reached exactly from start in steps of " +
                        format_real(step));
  }
  if (rounded > 1e7) bad_range(text, "too many points");
  const auto count = static_cast<std::size_t>(rounded) + 1;
  for (std::size_t k = 0; k + 1 < count; ++k) {
    range.values.push_back(first + static_cast<double>(k) * step);
  }
  range.values.push_back(last);
  return range;
}

StateSpec with_parameter(const StateSpec& spec, std::string_view key, double value) {
  const auto as_integer = [&]() {
    if (value != std::floor(value) || std::abs(value) > 9e15) {
      throw Error(ErrorKind::kBadValue, std::string(key) + " needs integral values, got " +
                                            format_real(value));
    }
    return static_cast<std::int64_t>(value);
  };

  StateSpec out = spec;
  const Family f = spec.family;
  if (key == "n" && f == Family::kNumber) {
    out.n = as_integer();
    if (out.dim != 0 && out.dim <= out.n) out.dim = 0;
  } else if (key == "n0" && (f == Family::kTruncatedPhase || f == Family::kTriangle)) {
    out.n0 = as_integer();
  } else if (key == "theta" && f == Family::kTruncatedPhase) {
    out.theta = value;
  } else if (key == "alpha" && f == Family::kCoherent) {
    out.alpha = Complex{value, 0.0};
  } else {
    throw Error(ErrorKind::kBadValue, "family '" + std::string(to_string(f)) +
                                          "' has no sweepable parameter '" +
                                          std::string(key) + "'");
  }
  return out;
}

std::vector<SweepPoint> sweep(const StateSpec& base, std::string_view key,
                              std::span<const double> values,
                              const RealizeDefaults& defaults, unsigned threads) {
  if (values.empty()) throw Error(ErrorKind::kBadValue, "sweep range is empty");
  // A bad key is a caller error, not a per-point failure.
  if (!is_sweep_key(base.family, key)) with_parameter(base, key, 0.0);

  std::vector<SweepPoint> points(values.size());
  internal::parallel_for(values.size(), threads, [&](std::size_t i) {
    SweepPoint& point = points[i];
    point.parameter = values[i];
    try {
      point.report = report(realize(with_parameter(base, key, values[i]), defaults));
    } catch (const Error& e) {
      point.error = e.what();
    }
  });
  return points;
}

}  // namespace phasenoise
