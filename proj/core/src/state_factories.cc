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

#include "phasenoise/state_factories.h"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "phasenoise/errors.h"
#include "phasenoise/number_format.h"
#include "phasenoise/state_io.h"
#include "phasenoise/summation.h"

namespace phasenoise {

PureState number_state(std::int64_t n, std::size_t dim) {
  if (n < 0 || static_cast<std::size_t>(n) >= dim) {
    throw Error(ErrorKind::kIndex, "number state |" + std::to_string(n) +
                                       "> needs dim > n (dim = " +
                                       std::to_string(dim) + ")");
  }
  Amplitudes amplitudes(dim, Complex{});
  amplitudes[static_cast<std::size_t>(n)] = 1.0;
  return canonicalize(amplitudes);
}

PureState coherent_state(Complex alpha, double tail_tol, std::size_t max_dim) {
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw Error(ErrorKind::kDomain, "tail_tol must lie in (0, 1e-6]");
  }
  if (max_dim < 2) throw Error(ErrorKind::kDomain, "max_dim must be >= 2");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw Error(ErrorKind::kDomain, "alpha must be finite");
  }

  const double r = std::abs(alpha);
  if (r == 0.0) return PureState();
  const double r2 = r * r;

  // Magnitudes |c_n| = sqrt(Poisson(n; r^2)), seeded at the mode in log space
  // so that large |alpha| does not underflow c_0, then extended in both
  // directions with c_{n+1} = c_n r / sqrt(n+1).
  const double mode_real = std::floor(r2);
  if (mode_real >= static_cast<double>(max_dim) + 64.0 * (r + 1.0)) {
    throw Error(ErrorKind::kDimExhausted,
                "|alpha|^2 = " + format_real(r2) + " far exceeds max_dim = " +
                    std::to_string(max_dim));
  }
  const auto mode = static_cast<std::size_t>(mode_real);
  const auto log_magnitude = [&](std::size_t n) {
    const double nd = static_cast<double>(n);
    return 0.5 * (-r2 + 2.0 * nd * std::log(r) - std::lgamma(nd + 1.0));
  };

  // Terms past the mode decrease monotonically; stop once they are far below
  // tail_tol instead of filling all of max_dim.
  const double negligible = 1e-30 * tail_tol;
  const std::size_t anchor = std::min(mode, max_dim - 1);
  std::vector<double> magnitude(anchor + 1, 0.0);
  magnitude[anchor] = std::exp(log_magnitude(anchor));
  for (std::size_t n = anchor; n > 0; --n) {
    magnitude[n - 1] = magnitude[n] * std::sqrt(static_cast<double>(n)) / r;
  }
  bool converged = false;
  while (magnitude.size() < max_dim) {
    const double a = magnitude.back() * r / std::sqrt(static_cast<double>(magnitude.size()));
    magnitude.push_back(a);
    if (magnitude.size() - 1 > mode && (a == 0.0 || a * a < negligible)) {
      converged = true;
      break;
    }
  }

  // Probability at indices >= magnitude.size().
  double tail_beyond = 0.0;
  if (!converged) {
    if (mode >= max_dim) {
      CompensatedSum kept;
      for (double a : magnitude) kept.add(a * a);
      tail_beyond = std::max(0.0, 1.0 - kept.value());
    } else {
      CompensatedSum beyond;
      double a = magnitude.back();
      for (std::size_t n = magnitude.size() - 1;; ++n) {
        a = a * r / std::sqrt(static_cast<double>(n + 1));
        const double p = a * a;
        beyond.add(p);
        if (p == 0.0 || p < negligible) break;
      }
      tail_beyond = beyond.value();
    }
    if (tail_beyond >= tail_tol) {
      throw Error(ErrorKind::kDimExhausted,
                  "tail probability " + format_real(tail_beyond) +
                      " at max_dim = " + std::to_string(max_dim) +
                      " is not below tail_tol = " + format_real(tail_tol));
    }
  }

  // Smallest D with sum_{n >= D} p_n < tail_tol.
  std::size_t dim = magnitude.size();
  CompensatedSum tail;
  tail.add(tail_beyond);
  for (std::size_t d = magnitude.size(); d > 1; --d) {
    tail.add(magnitude[d - 1] * magnitude[d - 1]);
    if (tail.value() >= tail_tol) break;
    dim = d - 1;
  }

  const Complex unit = alpha / r;
  Amplitudes amplitudes(dim);
  Complex phase{1.0, 0.0};
  for (std::size_t n = 0; n < dim; ++n) {
    amplitudes[n] = magnitude[n] * phase;
    phase *= unit;
  }
  return canonicalize(amplitudes);
}

PureState truncated_phase_state(double theta, std::int64_t n0) {
  if (n0 < 1) throw Error(ErrorKind::kDomain, "truncated phase state needs n0 >= 1");
  const auto dim = static_cast<std::size_t>(n0) + 1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Amplitudes amplitudes(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    amplitudes[n] = theta == 0.0 ? Complex{scale, 0.0}
                                 : std::polar(scale, static_cast<double>(n) * theta);
  }
  return canonicalize(amplitudes);
}

PureState triangle_state(std::int64_t n0) {
  if (n0 < 2) throw Error(ErrorKind::kDomain, "triangle state needs n0 >= 2");
  if (n0 % 2 != 0) {
    throw Error(ErrorKind::kParity, "triangle state needs even n0, got " +
                                        std::to_string(n0));
  }
  const double n0d = static_cast<double>(n0);
  const double k = 2.0 * std::sqrt(3.0) / std::sqrt(n0d * (n0d * n0d + 2.0));
  const std::int64_t half = n0 / 2;
  Amplitudes amplitudes(static_cast<std::size_t>(n0) + 1);
  for (std::int64_t n = 0; n <= n0; ++n) {
    const std::int64_t w = n <= half ? n : n0 - n;
    amplitudes[static_cast<std::size_t>(n)] = k * static_cast<double>(w);
  }
  return canonicalize(amplitudes);
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kNumber: return "number";
    case Family::kCoherent: return "coherent";
    case Family::kTruncatedPhase: return "tps";
    case Family::kTriangle: return "triangle";
    case Family::kFile: return "file";
    case Family::kRaw: return "raw";
  }
  return "unknown";
}

namespace {

std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Coefficient of an imaginary part: "" / "+" -> 1, "-" -> -1.
std::optional<double> parse_imag_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_double(text);
}

std::optional<Complex> try_parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_double(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading sign and not part of an
  // exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_imag_coefficient(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = parse_double(body.substr(0, split));
  const auto im = parse_imag_coefficient(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

struct RawParam {
  std::string_view value;
  std::size_t key_position;
  std::size_t value_position;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  StateSpec parse() {
    const std::size_t colon = text_.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(ErrorKind::kParse, text_.size(),
                       "expected 'family:params' in '" + std::string(text_) + "'");
    }
    const std::string_view family = text_.substr(0, colon);
    const std::size_t body_start = colon + 1;
    const std::string_view body = text_.substr(body_start);

    StateSpec spec;
    if (family == "number") {
      spec.family = Family::kNumber;
    } else if (family == "coherent") {
      spec.family = Family::kCoherent;
    } else if (family == "tps" || family == "truncated_phase") {
      spec.family = Family::kTruncatedPhase;
    } else if (family == "triangle") {
      spec.family = Family::kTriangle;
    } else if (family == "file") {
      spec.family = Family::kFile;
      spec.path = parse_path(body, body_start);
      return spec;
    } else if (family == "raw") {
      spec.family = Family::kRaw;
    } else {
      throw ParseError(ErrorKind::kUnknownFamily, 0,
                       "unknown state family '" + std::string(family) + "'");
    }

    const auto params = split_params(body, body_start);
    switch (spec.family) {
      case Family::kNumber:
        check_keys(params, {"n"}, {"dim"});
        spec.n = integer(params, "n");
        if (spec.n < 0) bad(params.at("n"), "n must be >= 0");
        if (params.contains("dim")) {
          spec.dim = integer(params, "dim");
          if (spec.dim <= spec.n) bad(params.at("dim"), "dim must exceed n");
        }
        break;
      case Family::kCoherent:
        check_keys(params, {"alpha"}, {});
        spec.alpha = complex_value(params.at("alpha"));
        break;
      case Family::kTruncatedPhase:
        check_keys(params, {"n0"}, {"theta"});
        spec.n0 = integer(params, "n0");
        if (spec.n0 < 1) bad(params.at("n0"), "n0 must be >= 1");
        if (params.contains("theta")) spec.theta = real(params.at("theta"));
        break;
      case Family::kTriangle:
        check_keys(params, {"n0"}, {});
        spec.n0 = integer(params, "n0");
        if (spec.n0 < 2 || spec.n0 % 2 != 0) {
          bad(params.at("n0"), "n0 must be even and >= 2");
        }
        break;
      case Family::kRaw: {
        check_keys(params, {"amps"}, {});
        const RawParam& raw = params.at("amps");
        std::size_t start = 0;
        while (start <= raw.value.size()) {
          std::size_t end = raw.value.find(';', start);
          if (end == std::string_view::npos) end = raw.value.size();
          const std::string_view item = raw.value.substr(start, end - start);
          const auto z = try_parse_complex(item);
          if (!z) {
            throw ParseError(ErrorKind::kBadValue, raw.value_position + start,
                             "bad amplitude '" + std::string(item) + "'");
          }
          spec.amplitudes.push_back(*z);
          start = end + 1;
        }
        bool any_nonzero = false;
        for (const Complex& z : spec.amplitudes) any_nonzero |= (z != 0.0);
        if (!any_nonzero) bad(raw, "raw amplitudes are all zero");
        break;
      }
      case Family::kFile:
        break;
    }
    return spec;
  }

 private:
  using Params = std::map<std::string, RawParam, std::less<>>;

  std::string parse_path(std::string_view body, std::size_t offset) const {
    std::string_view value = body;
    std::size_t position = offset;
    if (body.starts_with("path=")) {
      value = body.substr(5);
      position += 5;
    }
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') {
        throw ParseError(ErrorKind::kParse, position, "unterminated quoted path");
      }
      value = value.substr(1, value.size() - 2);
    }
    if (value.empty()) {
      throw ParseError(ErrorKind::kMissingParam, position, "file family needs a path");
    }
    return std::string(value);
  }

  Params split_params(std::string_view body, std::size_t offset) const {
    Params params;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string_view::npos) end = body.size();
      const std::string_view item = body.substr(start, end - start);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError(ErrorKind::kParse, offset + start,
                         "expected key=value, got '" + std::string(item) + "'");
      }
      const std::string key(item.substr(0, eq));
      if (params.contains(key)) {
        throw ParseError(ErrorKind::kParse, offset + start,
                         "duplicate parameter '" + key + "'");
      }
      params.emplace(key, RawParam{item.substr(eq + 1), offset + start,
                                   offset + start + eq + 1});
      start = end + 1;
    }
    return params;
  }

  void check_keys(const Params& params, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) const {
    for (const auto& [key, raw] : params) {
      bool known = false;
      for (auto k : required) known |= (k == key);
      for (auto k : optional) known |= (k == key);
      if (!known) {
        throw ParseError(ErrorKind::kBadValue, raw.key_position,
                         "unexpected parameter '" + key + "'");
      }
    }
    for (auto k : required) {
      if (!params.contains(k)) {
        throw ParseError(ErrorKind::kMissingParam, text_.size(),
                         "missing parameter '" + std::string(k) + "'");
      }
    }
  }

  [[noreturn]] static void bad(const RawParam& raw, const std::string& message) {
    throw ParseError(ErrorKind::kBadValue, raw.value_position,
                     message + " (got '" + std::string(raw.value) + "')");
  }

  static std::int64_t integer(const Params& params, std::string_view key) {
    const RawParam& raw = params.find(key)->second;
    std::int64_t value = 0;
    std::string_view text = raw.value;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      bad(raw, std::string(key) + " must be an integer");
    }
    return value;
  }

  static double real(const RawParam& raw) {
    const auto value = parse_double(raw.value);
    if (!value) bad(raw, "expected a real number");
    return *value;
  }

  static Complex complex_value(const RawParam& raw) {
    const auto value = try_parse_complex(raw.value);
    if (!value) bad(raw, "expected a complex number a+bi");
    return *value;
  }

  std::string_view text_;
};

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto value = try_parse_complex(text);
  if (!value) {
    throw Error(ErrorKind::kBadValue, "bad complex literal '" + std::string(text) + "'");
  }
  return *value;
}

std::string format_complex(Complex value) {
  std::string out = format_real(value.real());
  if (value.imag() != 0.0 || std::signbit(value.imag())) {
    const std::string im = format_real(value.imag());
    if (im.front() != '-') out += '+';
    out += im + "i";
  }
  return out;
}

StateSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const StateSpec& spec) {
  std::string out(to_string(spec.family));
  out += ':';
  switch (spec.family) {
    case Family::kNumber:
      out += "n=" + std::to_string(spec.n);
      if (spec.dim != 0) out += ",dim=" + std::to_string(spec.dim);
      break;
    case Family::kCoherent:
      out += "alpha=" + format_complex(spec.alpha);
      break;
    case Family::kTruncatedPhase:
      out += "n0=" + std::to_string(spec.n0);
      if (spec.theta != 0.0) out += ",theta=" + format_real(spec.theta);
      break;
    case Family::kTriangle:
      out += "n0=" + std::to_string(spec.n0);
      break;
    case Family::kFile: {
      const bool quote = spec.path.find_first_of(",\"") != std::string::npos ||
                         spec.path.starts_with("path=");
      out += quote ? "path=\"" + spec.path + "\"" : spec.path;
      break;
    }
    case Family::kRaw:
      out += "amps=";
      for (std::size_t k = 0; k < spec.amplitudes.size(); ++k) {
        if (k > 0) out += ';';
        out += format_complex(spec.amplitudes[k]);
      }
      break;
  }
  return out;
}

PureState realize(const StateSpec& spec, const RealizeDefaults& defaults) {
  switch (spec.family) {
    case Family::kNumber: {
      const std::int64_t dim = spec.dim != 0 ? spec.dim : spec.n + 1;
      return number_state(spec.n, static_cast<std::size_t>(dim));
    }
    case Family::kCoherent:
      return coherent_state(spec.alpha, defaults.tail_tol, defaults.max_dim);
    case Family::kTruncatedPhase:
      return truncated_phase_state(spec.theta, spec.n0);
    case Family::kTriangle:
      return triangle_state(spec.n0);
    case Family::kFile:
      return read_state_file(spec.path);
    case Family::kRaw:
      return canonicalize(spec.amplitudes);
  }
  throw Error(ErrorKind::kDomain, "unhandled state family");
}

}  // namespace phasenoise
