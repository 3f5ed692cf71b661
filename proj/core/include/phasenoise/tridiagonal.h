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

// Extreme eigenpairs of real symmetric tridiagonal matrices: Sturm-sequence
// bisection for eigenvalues, inverse iteration (pivoted tridiagonal LU) for
// the eigenvector. O(n) memory.

#ifndef PHASENOISE_TRIDIAGONAL_H_
#define PHASENOISE_TRIDIAGONAL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace phasenoise {

struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size diagonal.size() - 1

  std::size_t size() const { return diagonal.size(); }
};

// Number of eigenvalues strictly below x.
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

// Eigenvalue k in ascending order (k = 0 is the smallest), bisected to
// machine resolution.
double eigenvalue(const SymmetricTridiagonal& t, std::size_t k);

// max_i |(T v)_i - lambda v_i|
double residual_inf(const SymmetricTridiagonal& t, std::span<const double> v, double lambda);

// v^T T v for unit v.
double rayleigh_quotient(const SymmetricTridiagonal& t, std::span<const double> v);

struct TopEigenpair {
  double value = 0.0;          // Rayleigh quotient of `vector`
  std::vector<double> vector;  // unit 2-norm, sum of entries >= 0
  double residual = 0.0;       // residual_inf(t, vector, value)
  double gap = 0.0;            // value - second eigenvalue (inf if n == 1)
  int iterations = 0;          // inverse-iteration steps
};

struct TopEigenOptions {
  int max_iterations = 100000;
  bool compute_gap = true;
};

// Largest eigenvalue and its eigenvector. Throws Error(kConvergenceFailure)
// if inverse iteration does not settle within max_iterations.
TopEigenpair top_eigenpair(const SymmetricTridiagonal& t, const TopEigenOptions& options = {});

}  // namespace phasenoise

#endif  // PHASENOISE_TRIDIAGONAL_H_
