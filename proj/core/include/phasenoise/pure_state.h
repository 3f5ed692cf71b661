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

// Pure states of a single bosonic mode on a truncated Fock basis, the
// Susskind-Glogower shift operators E+ and E-, and the moments built from
// them.
//
// Basis index n labels the number state |n>. A state of dimension `dim`
// keeps the levels 0..dim-1 and is implicitly zero above. Operators never
// grow `dim`; E+ reports the probability it pushes off the top level.

#ifndef PHASENOISE_PURE_STATE_H_
#define PHASENOISE_PURE_STATE_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace phasenoise {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

// Tolerance on |norm^2 - 1| accepted when a state is constructed.
inline constexpr double kConstructionNormTolerance = 1e-12;
// Tolerance on |norm^2 - 1| accepted by operations requiring a unit vector.
inline constexpr double kOperationNormTolerance = 1e-10;
// Below this, E+ truncation loss is not flagged.
inline constexpr double kTruncationLossThreshold = 1e-12;

// A normalized state in canonical global phase: the lowest nonzero amplitude
// is real and nonnegative. Immutable once built.
class PureState {
 public:
  // Vacuum of dimension 1.
  PureState();

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }

  operator std::span<const Complex>() const { return amplitudes_; }

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  friend PureState canonicalize(std::span<const Complex> amplitudes);
  explicit PureState(Amplitudes amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  Amplitudes amplitudes_;
};

// Normalizes and fixes the global phase. Throws Error(kZeroVector) if every
// amplitude is zero.
PureState canonicalize(std::span<const Complex> amplitudes);

double norm_squared(std::span<const Complex> amplitudes);

struct RaisedAmplitudes {
  Amplitudes amplitudes;
  // |in[dim-1]|^2, the probability dropped off the top of the basis.
  double truncation_loss = 0.0;

  bool truncated() const { return truncation_loss > kTruncationLossThreshold; }
};

// E+|n> = |n+1>. Not renormalized.
RaisedAmplitudes apply_e_plus(std::span<const Complex> amplitudes);

// E-|n> = |n-1>, E-|0> = 0. Not renormalized.
Amplitudes apply_e_minus(std::span<const Complex> amplitudes);

// <a|b>. The shorter vector is treated as zero-padded.
Complex overlap(std::span<const Complex> a, std::span<const Complex> b);

struct Moments {
  double mean_n = 0.0;
  double var_n = 0.0;
  Complex e_minus;
  double p0 = 0.0;
  // C and S are hermitian so these are real up to rounding; the imaginary
  // parts are kept as a self-check.
  Complex c_mean;
  Complex s_mean;
  double c_var = 0.0;
  double s_var = 0.0;
};

// All expectation values in one O(dim) pass. <C^2> and <S^2> use
// E-E+ = 1 and E+E- = 1 - P0 rather than dense operators:
//   C^2 = (E-^2 + E+^2 + 2 - P0) / 4,   S^2 = (2 - P0 - E-^2 - E+^2) / 4.
// Throws Error(kNorm) if |norm^2 - 1| > kOperationNormTolerance.
Moments moments(std::span<const Complex> amplitudes);

}  // namespace phasenoise

#endif  // PHASENOISE_PURE_STATE_H_
