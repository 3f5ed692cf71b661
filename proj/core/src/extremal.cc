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

#include "phasenoise/extremal.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.h"
#include "phasenoise/errors.h"
#include "phasenoise/number_format.h"
#include "phasenoise/phase_noise.h"
#include "phasenoise/summation.h"

namespace phasenoise {

namespace {

struct Evaluation {
  double mu = 0.0;
  double mean_n = 0.0;
  TopEigenpair eigen;
};

double mean_photon_number(std::span<const double> v) {
  CompensatedSum sum;
  for (std::size_t n = 0; n < v.size(); ++n) sum.add(static_cast<double>(n) * v[n] * v[n]);
  return sum.value();
}

class Solver {
 public:
  Solver(std::size_t dim, const ExtremalOptions& options, ExtremalResult& result)
      : dim_(dim), options_(options), result_(result) {}

  Evaluation evaluate(double mu, bool with_gap = false) {
    Evaluation e;
    e.mu = mu;
    TopEigenOptions eigen_options;
    eigen_options.max_iterations = options_.max_eigen_iterations;
    eigen_options.compute_gap = with_gap;
    e.eigen = top_eigenpair(lagrange_matrix(mu, dim_), eigen_options);
    // The Perron vector is positive; anything else in the far tail is
    // rounding noise.
    for (double& x : e.eigen.vector) x = std::abs(x);
    e.mean_n = mean_photon_number(e.eigen.vector);
    result_.trace.emplace_back(mu, e.mean_n);
    return e;
  }

 private:
  std::size_t dim_;
  const ExtremalOptions& options_;
  ExtremalResult& result_;
};

[[noreturn]] void infeasible(double target_n, std::size_t dim) {
  throw Error(ErrorKind::kBisectionFailure,
              "target mean photon number " + format_real(target_n) +
                  " is outside the achievable range [0, " + std::to_string(dim - 1) +
                  "] for dim = " + std::to_string(dim));
}

ExtremalResult edge_state(double target_n, std::size_t level, std::size_t dim) {
  ExtremalResult r;
  r.target_n = target_n;
  Amplitudes amplitudes(dim, Complex{});
  amplitudes[level] = 1.0;
  r.state = canonicalize(amplitudes);
  r.mu = level == 0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
  r.mean_n = static_cast<double>(level);
  r.phase_noise = 1.0;
  r.eigenvalue = level == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  r.constraint_residual = std::abs(r.mean_n - target_n);
  r.truncation_suspect = level + 1 == dim && dim > 1;
  return r;
}

}  // namespace

SymmetricTridiagonal lagrange_matrix(double mu, std::size_t dim) {
  SymmetricTridiagonal t;
  t.diagonal.resize(dim);
  for (std::size_t n = 0; n < dim; ++n) t.diagonal[n] = -mu * static_cast<double>(n);
  t.off_diagonal.assign(dim > 0 ? dim - 1 : 0, 0.5);
  return t;
}

ExtremalResult minimize_phase_noise(double target_n, std::size_t dim,
                                    const ExtremalOptions& options) {
  if (dim < 1) throw Error(ErrorKind::kDomain, "dim must be >= 1");
  if (!(options.tol >= 1e-12)) throw Error(ErrorKind::kDomain, "tol must be >= 1e-12");
  const double top = static_cast<double>(dim - 1);
  if (!std::isfinite(target_n) || target_n < 0.0 || target_n > top) {
    infeasible(target_n, dim);
  }
  if (target_n == 0.0) return edge_state(target_n, 0, dim);
  if (target_n == top) return edge_state(target_n, dim - 1, dim);

  ExtremalResult result;
  result.target_n = target_n;
  Solver solver(dim, options, result);
  const double accept = options.tol * std::max(1.0, target_n);
  // Slack for the monotonicity check: well above eigenvector rounding.
  const double monotone_slack = 1e-9 * std::max(1.0, target_n);

  // Bracket: <N>(lo) >= target >= <N>(hi).
  Evaluation center = solver.evaluate(0.0);
  Evaluation lo = center;
  Evaluation hi = center;
  constexpr double kMaxMu = 1e300;
  if (center.mean_n >= target_n) {
    double mu = 1.0;
    hi = solver.evaluate(mu);
    while (hi.mean_n >= target_n) {
      if (hi.mean_n > lo.mean_n + monotone_slack) break;
      lo = std::move(hi);
      mu *= 2.0;
      if (mu > kMaxMu) {
        throw Error(ErrorKind::kBisectionFailure,
                    "could not bracket the multiplier for target " + format_real(target_n));
      }
      hi = solver.evaluate(mu);
    }
  } else {
    double mu = -1.0;
    lo = solver.evaluate(mu);
    while (lo.mean_n <= target_n) {
      if (lo.mean_n < hi.mean_n - monotone_slack) break;
      hi = std::move(lo);
      mu *= 2.0;
      if (mu < -kMaxMu) {
        throw Error(ErrorKind::kBisectionFailure,
                    "could not bracket the multiplier for target " + format_real(target_n));
      }
      lo = solver.evaluate(mu);
    }
  }
  if (lo.mean_n < hi.mean_n - monotone_slack) {
    throw Error(ErrorKind::kConvergenceFailure, "<N>(mu) increased while bracketing");
  }

  std::optional<Evaluation> found;
  if (std::abs(lo.mean_n - target_n) <= accept) found = lo;
  if (std::abs(hi.mean_n - target_n) <= accept) found = hi;

  int steps = 0;
  while (!found) {
    if (steps >= options.max_bisections) {
      throw Error(ErrorKind::kConvergenceFailure,
                  "multiplier bisection did not converge in " +
                      std::to_string(options.max_bisections) + " steps");
    }
    const double mid = lo.mu + 0.5 * (hi.mu - lo.mu);
    if (mid <= lo.mu || mid >= hi.mu) {
      throw Error(ErrorKind::kConvergenceFailure,
                  "multiplier interval exhausted before <N> reached tolerance");
    }
    ++steps;
    Evaluation e = solver.evaluate(mid);
    if (e.mean_n > lo.mean_n + monotone_slack || e.mean_n < hi.mean_n - monotone_slack) {
      throw Error(ErrorKind::kConvergenceFailure,
                  "<N>(mu) is not monotone at mu = " + format_real(mid));
    }
    if (std::abs(e.mean_n - target_n) <= accept) {
      found = std::move(e);
    } else if (e.mean_n > target_n) {
      lo = std::move(e);
    } else {
      hi = std::move(e);
    }
  }

  // Re-solve with the gap for the degeneracy check.
  const Evaluation final_eval = solver.evaluate(found->mu, /*with_gap=*/true);
  Amplitudes amplitudes(dim);
  for (std::size_t n = 0; n < dim; ++n) amplitudes[n] = final_eval.eigen.vector[n];
  result.state = canonicalize(amplitudes);

  std::vector<double> real_state(dim);
  for (std::size_t n = 0; n < dim; ++n) real_state[n] = result.state[n].real();
  const SymmetricTridiagonal t = lagrange_matrix(final_eval.mu, dim);
  result.mu = final_eval.mu;
  result.eigenvalue = rayleigh_quotient(t, real_state);
  result.eigen_residual = residual_inf(t, real_state, result.eigenvalue);
  const Moments m = moments(result.state);
  result.mean_n = m.mean_n;
  result.phase_noise = phase_noise(m);
  result.constraint_residual = std::abs(m.mean_n - target_n);
  result.iterations = steps;
  result.degenerate = final_eval.eigen.gap < kDegenerateGap;
  result.truncation_suspect = std::abs(result.state[dim - 1]) > kTruncationSuspectAmplitude;
  return result;
}

std::vector<ExtremalSweepPoint> sweep_extremal(std::span<const double> targets,
                                               std::size_t dim,
                                               const ExtremalOptions& options) {
  if (targets.empty()) throw Error(ErrorKind::kBadValue, "no extremal targets given");
  if (!std::is_sorted(targets.begin(), targets.end())) {
    throw Error(ErrorKind::kBadValue, "extremal targets must be ascending");
  }
  std::vector<ExtremalSweepPoint> points(targets.size());
  internal::parallel_for(targets.size(), options.threads, [&](std::size_t i) {
    ExtremalSweepPoint& p = points[i];
    p.target_n = targets[i];
    try {
      p.result = minimize_phase_noise(targets[i], dim, options);
      p.scaled_noise = p.result->phase_noise * targets[i] * targets[i];
    } catch (const Error& e) {
      p.error = e.what();
    }
  });
  return points;
}

}  // namespace phasenoise
