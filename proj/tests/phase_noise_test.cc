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


#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "phasenoise/errors.h"
#include "phasenoise/phase_noise.h"
#include "phasenoise/random.h"
#include "phasenoise/state_factories.h"
#include "phasenoise/verify_identities.h"

namespace phasenoise {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kDomain;
}

TEST(PhaseNoiseTest, Examples) {
  EXPECT_EQ(phase_noise(number_state(7, 8)), 1.0);
  EXPECT_NEAR(phase_noise(truncated_phase_state(0.0, 4)), 0.36, 1e-15);
  const Amplitudes plus = {std::sqrt(0.5), std::sqrt(0.5)};
  EXPECT_NEAR(phase_noise(plus), 0.75, 1e-15);
}

TEST(PhaseNoiseTest, RejectsUnnormalized) {
  const Amplitudes c = {0.5, 0.5};
  EXPECT_EQ(kind_of([&] { phase_noise(c); }), ErrorKind::kNorm);
}

TEST(ReportTest, NumberStatesSaturateStateFreeRelation) {
  for (std::int64_t n = 0; n <= 50; ++n) {
    NoiseReport r = report(number_state(n, static_cast<std::size_t>(n) + 1));
    EXPECT_EQ(r.lhs_eq8, 0.25);
    EXPECT_EQ(r.slack_eq8, 0.0);
    EXPECT_EQ(r.rhs_eq8, 0.25);
  }
}

TEST(ReportTest, LargeCoherentStateIsNearMinimumUncertainty) {
  NoiseReport r = report(coherent_state(10.0));
  EXPECT_LT(std::abs(r.lhs_eq8 / 0.25 - 1.0), 0.02);
}

TEST(ReportTest, TruncatedPhaseLargeN0) {
  const double n0 = 600;
  NoiseReport r = report(truncated_phase_state(0.0, 600));
  EXPECT_LT(std::abs(r.lhs_eq8 / (n0 / 6.0) - 1.0), 0.02);
  EXPECT_LT(std::abs(r.rhs_eq7 / (n0 / 24.0) - 1.0), 0.05);
}

TEST(ReportTest, FieldsAreConsistent) {
  CounterRng rng(8, 8);
  PureState s = haar_random_state(rng, 20);
  NoiseReport r = report(s);
  const Moments& m = r.moments;
  EXPECT_DOUBLE_EQ(r.phase_noise, 1.0 - std::norm(m.e_minus));
  EXPECT_DOUBLE_EQ(r.lhs_eq8, (m.var_n + 0.25) * r.phase_noise);
  EXPECT_DOUBLE_EQ(r.rhs_eq7, 0.25 + 0.5 * m.p0 * m.var_n);
  EXPECT_DOUBLE_EQ(r.slack_eq8, r.lhs_eq8 - 0.25);
  EXPECT_DOUBLE_EQ(r.slack_eq7, r.lhs_eq8 - r.rhs_eq7);
}

// Every uncertainty relation holds on Haar-random states of all small
// dimensions, and the state-dependent bound is never looser.
TEST(ReportTest, RelationsHoldOnRandomStates) {
  for (std::uint64_t t = 0; t < 10000; ++t) {
    CounterRng rng(1234, t);
    PureState s = haar_random_state(rng, 1 + rng.uniform_int(1, 64));
    NoiseReport r = report(s);
    ASSERT_GE(r.slack_eq8, -kSlackTolerance) << t;
    ASSERT_GE(r.slack_eq7, -kSlackTolerance) << t;
    ASSERT_LE(r.slack_eq7, r.slack_eq8 + 1e-12) << t;
    ASSERT_GE(r.cs_slacks.first, -kSlackTolerance) << t;
    ASSERT_GE(r.cs_slacks.second, -kSlackTolerance) << t;
    ASSERT_GE(r.phase_noise, 0.0);
    ASSERT_LE(r.phase_noise, 1.0);
  }
}

TEST(ParseRangeTest, IntegerAndRealRanges) {
  ParameterRange a = parse_range("1:1:10");
  EXPECT_TRUE(a.integral);
  ASSERT_EQ(a.values.size(), 10u);
  EXPECT_EQ(a.values.front(), 1.0);
  EXPECT_EQ(a.values.back(), 10.0);

  ParameterRange b = parse_range("0:0.25:1");
  EXPECT_FALSE(b.integral);
  ASSERT_EQ(b.values.size(), 5u);
  EXPECT_EQ(b.values[2], 0.5);

  ParameterRange c = parse_range("4");
  ASSERT_EQ(c.values.size(), 1u);
  EXPECT_EQ(c.values[0], 4.0);
}

TEST(ParseRangeTest, Errors) {
  EXPECT_THROW(parse_range("1:0:5"), Error);
  EXPECT_THROW(parse_range("1:-1:5"), Error);
  EXPECT_THROW(parse_range("5:1:1"), Error);
  EXPECT_THROW(parse_range("1:2:4"), Error);
  EXPECT_THROW(parse_range("a:b:c"), Error);
}

TEST(SweepTest, TruncatedPhaseRowsIncrease) {
  StateSpec base = parse_spec("tps:n0=1");
  const std::vector<double> values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<SweepPoint> points = sweep(base, "n0", values);
  ASSERT_EQ(points.size(), 10u);
  for (std::size_t i = 0; i < points.size(); ++i) {
    ASSERT_TRUE(points[i].report.has_value());
    EXPECT_EQ(points[i].parameter, values[i]);
    if (i > 0) {
      EXPECT_GT(points[i].report->lhs_eq8, points[i - 1].report->lhs_eq8);
    }
  }
}

TEST(SweepTest, PointErrorsAreRecordedNotFatal) {
  StateSpec base = parse_spec("coherent:alpha=1");
  const std::vector<double> values = {1.0, 30.0, 2.0};
  RealizeDefaults small;
  small.max_dim = 64;
  std::vector<SweepPoint> points = sweep(base, "alpha", values, small);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_TRUE(points[0].report.has_value());
  EXPECT_FALSE(points[1].report.has_value());
  EXPECT_FALSE(points[1].error.empty());
  EXPECT_TRUE(points[2].report.has_value());
}

TEST(SweepTest, ThreadCountDoesNotChangeResults) {
  StateSpec base = parse_spec("triangle:n0=2");
  std::vector<double> values;
  for (int n0 = 2; n0 <= 200; n0 += 2) values.push_back(n0);
  auto one = sweep(base, "n0", values, {}, 1);
  auto four = sweep(base, "n0", values, {}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].report->phase_noise, four[i].report->phase_noise);
    EXPECT_EQ(one[i].report->lhs_eq8, four[i].report->lhs_eq8);
  }
}

TEST(SweepTest, RejectsUnknownKey) {
  StateSpec base = parse_spec("number:n=1");
  const std::vector<double> values = {1.0};
  EXPECT_THROW(sweep(base, "theta", values), Error);
}

}  // namespace
}  // namespace phasenoise
