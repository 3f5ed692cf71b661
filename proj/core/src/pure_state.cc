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

#include "phasenoise/pure_state.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasenoise/errors.h"
#include "phasenoise/summation.h"

namespace phasenoise {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNorm: return "NormError";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kIndex: return "IndexError";
    case ErrorKind::kDimExhausted: return "DimExhausted";
    case ErrorKind::kParity: return "ParityError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kUnknownFamily: return "UnknownFamily";
    case ErrorKind::kMissingParam: return "MissingParam";
    case ErrorKind::kBadValue: return "BadValue";
    case ErrorKind::kFile: return "FileError";
    case ErrorKind::kFormat: return "FormatError";
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kBisectionFailure: return "BisectionFailure";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
  }
  return "Error";
}

PureState::PureState() : amplitudes_{Complex{1.0, 0.0}} {}

double norm_squared(std::span<const Complex> amplitudes) {
  CompensatedSum sum;
  for (const Complex& c : amplitudes) sum.add(std::norm(c));
  return sum.value();
}

PureState canonicalize(std::span<const Complex> amplitudes) {
  const auto first = std::find_if(amplitudes.begin(), amplitudes.end(),
                                  [](const Complex& c) { return c != 0.0; });
  if (first == amplitudes.end()) {
    throw Error(ErrorKind::kZeroVector, "cannot canonicalize the zero vector");
  }
  const double norm = std::sqrt(norm_squared(amplitudes));
  if (!std::isfinite(norm)) {
    throw Error(ErrorKind::kNorm, "state norm is not finite");
  }

  Amplitudes out(amplitudes.begin(), amplitudes.end());
  if (first->imag() == 0.0 && first->real() > 0.0) {
    // Already in canonical phase; only rescale so exact sign structure
    // (e.g. alpha vs -alpha coherent states) survives untouched.
    if (norm != 1.0) {
      for (Complex& c : out) c /= norm;
    }
  } else {
    const Complex phase = std::conj(*first) / std::abs(*first);
    for (Complex& c : out) c = c * phase / norm;
    // Remove the rounding residue on the reference amplitude.
    const auto index = static_cast<std::size_t>(first - amplitudes.begin());
    out[index] = Complex{std::abs(out[index]), 0.0};
  }
  return PureState(std::move(out));
}

RaisedAmplitudes apply_e_plus(std::span<const Complex> amplitudes) {
  RaisedAmplitudes result;
  result.amplitudes.assign(amplitudes.size(), Complex{});
  if (amplitudes.empty()) return result;
  for (std::size_t n = 0; n + 1 < amplitudes.size(); ++n) {
    result.amplitudes[n + 1] = amplitudes[n];
  }
  result.truncation_loss = std::norm(amplitudes.back());
  return result;
}

Amplitudes apply_e_minus(std::span<const Complex> amplitudes) {
  Amplitudes out(amplitudes.size(), Complex{});
  for (std::size_t n = 0; n + 1 < amplitudes.size(); ++n) {
    out[n] = amplitudes[n + 1];
  }
  return out;
}

Complex overlap(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t common = std::min(a.size(), b.size());
  CompensatedComplexSum sum;
  for (std::size_t n = 0; n < common; ++n) sum.add(std::conj(a[n]) * b[n]);
  return sum.value();
}

Moments moments(std::span<const Complex> amplitudes) {
  const double norm2 = norm_squared(amplitudes);
  if (!(std::abs(norm2 - 1.0) <= kOperationNormTolerance)) {
    throw Error(ErrorKind::kNorm,
                "state is not normalized (norm^2 = " + std::to_string(norm2) +
                    ")");
  }

  const std::size_t dim = amplitudes.size();
  CompensatedSum n_sum;
  CompensatedSum n2_sum;
  CompensatedComplexSum e1_sum;  // sum c_n^* c_{n+1}
  CompensatedComplexSum e2_sum;  // sum c_n^* c_{n+2}
  for (std::size_t n = 0; n < dim; ++n) {
    const double p = std::norm(amplitudes[n]);
    const double nd = static_cast<double>(n);
    n_sum.add(nd * p);
    n2_sum.add(nd * nd * p);
    if (n + 1 < dim) e1_sum.add(std::conj(amplitudes[n]) * amplitudes[n + 1]);
    if (n + 2 < dim) e2_sum.add(std::conj(amplitudes[n]) * amplitudes[n + 2]);
  }

  Moments m;
  m.mean_n = n_sum.value();
  m.var_n = std::max(0.0, n2_sum.value() - m.mean_n * m.mean_n);
  m.e_minus = e1_sum.value();
  m.p0 = dim > 0 ? std::norm(amplitudes[0]) : 0.0;

  const Complex e_plus = std::conj(m.e_minus);
  m.c_mean = (m.e_minus + e_plus) / 2.0;
  m.s_mean = (m.e_minus - e_plus) / Complex{0.0, 2.0};

  const double e2_re = e2_sum.value().real();
  const double c2 = (2.0 * e2_re + 2.0 - m.p0) / 4.0;
  const double s2 = (2.0 - m.p0 - 2.0 * e2_re) / 4.0;
  m.c_var = c2 - m.c_mean.real() * m.c_mean.real();
  m.s_var = s2 - m.s_mean.real() * m.s_mean.real();
  return m;
}

}  // namespace phasenoise
