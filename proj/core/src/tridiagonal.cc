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

#include "phasenoise/tridiagonal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "phasenoise/errors.h"
#include "phasenoise/summation.h"

namespace phasenoise {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_shape(const SymmetricTridiagonal& t) {
  if (t.diagonal.empty()) throw Error(ErrorKind::kDomain, "empty tridiagonal matrix");
  if (t.off_diagonal.size() + 1 != t.diagonal.size()) {
    throw Error(ErrorKind::kDomain, "off-diagonal must have size n - 1");
  }
}

double inf_norm(const SymmetricTridiagonal& t) {
  double norm = 0.0;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(t.diagonal[i]);
    if (i > 0) row += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) row += std::abs(t.off_diagonal[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin(const SymmetricTridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - radius);
    hi = std::max(hi, t.diagonal[i] + radius);
  }
  const double pad = kEps * std::max({std::abs(lo), std::abs(hi), 1.0});
  return {lo - pad, hi + pad};
}

// Pivoted LU of (T - shift I), as in LAPACK's gttrf.
class ShiftedFactorization {
 public:
  ShiftedFactorization(const SymmetricTridiagonal& t, double shift, double pivot_floor) {
    const std::size_t n = t.size();
    d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d_[i] = t.diagonal[i] - shift;
    dl_ = t.off_diagonal;
    du_ = t.off_diagonal;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 0 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = pivot_floor;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    for (double& pivot : d_) {
      if (pivot == 0.0) pivot = pivot_floor;
    }
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) {
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

 private:
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> swapped_;
};

void normalize(std::vector<double>& v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw Error(ErrorKind::kConvergenceFailure, "inverse iteration produced a degenerate vector");
  }
  CompensatedSum sum;
  for (double& x : v) {
    x /= scale;
    sum.add(x * x);
  }
  const double norm = std::sqrt(sum.value());
  for (double& x : v) x /= norm;
}

}  // namespace

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  check_shape(t);
  const std::size_t n = t.size();
  const double tiny = std::numeric_limits<double>::min() / kEps;
  std::size_t count = 0;
  double q = t.diagonal[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    const double e = t.off_diagonal[i];
    q = t.diagonal[i + 1] - x - e * e / q;
  }
  return count;
}

double eigenvalue(const SymmetricTridiagonal& t, std::size_t k) {
  check_shape(t);
  if (k >= t.size()) throw Error(ErrorKind::kIndex, "eigenvalue index out of range");
  auto [lo, hi] = gershgorin(t);
  // Invariant: count(lo) <= k < count(hi).
  for (int step = 0; step < 4096; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double residual_inf(const SymmetricTridiagonal& t, std::span<const double> v, double lambda) {
  const std::size_t n = t.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (t.diagonal[i] - lambda) * v[i];
    if (i > 0) r += t.off_diagonal[i - 1] * v[i - 1];
    if (i + 1 < n) r += t.off_diagonal[i] * v[i + 1];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double rayleigh_quotient(const SymmetricTridiagonal& t, std::span<const double> v) {
  const std::size_t n = t.size();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    sum.add(t.diagonal[i] * v[i] * v[i]);
    if (i + 1 < n) sum.add(2.0 * t.off_diagonal[i] * v[i] * v[i + 1]);
  }
  return sum.value();
}

TopEigenpair top_eigenpair(const SymmetricTridiagonal& t, const TopEigenOptions& options) {
  check_shape(t);
  const std::size_t n = t.size();
  TopEigenpair result;
  if (n == 1) {
    result.value = t.diagonal[0];
    result.vector = {1.0};
    result.gap = std::numeric_limits<double>::infinity();
    return result;
  }

  const double norm = std::max(inf_norm(t), std::numeric_limits<double>::min());
  const double lambda = eigenvalue(t, n - 1);
  if (options.compute_gap) result.gap = lambda - eigenvalue(t, n - 2);

  // Shift just above the eigenvalue so the factorization stays nonsingular.
  const double shift = lambda + 4.0 * kEps * norm;
  const ShiftedFactorization lu(t, shift, kEps * norm);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const double target = 16.0 * kEps * norm;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_vector;
  double best_value = lambda;
  int stalled = 0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    lu.solve(v);
    normalize(v);
    const double value = rayleigh_quotient(t, v);
    const double res = residual_inf(t, v, value);
    result.iterations = it;
    if (res < best) {
      stalled = (res > 0.5 * best) ? stalled + 1 : 0;
      best = res;
      best_vector = v;
      best_value = value;
    } else {
      ++stalled;
    }
    if (best <= target || stalled >= 3) break;
  }
  if (!(best <= std::sqrt(kEps) * norm)) {
    throw Error(ErrorKind::kConvergenceFailure,
                "inverse iteration did not converge in " +
                    std::to_string(options.max_iterations) + " steps");
  }

  CompensatedSum total;
  for (double x : best_vector) total.add(x);
  if (total.value() < 0.0) {
    for (double& x : best_vector) x = -x;
  }
  result.value = best_value;
  result.vector = std::move(best_vector);
  result.residual = best;
  return result;
}

}  // namespace phasenoise
