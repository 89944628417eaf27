// Copyright 2026 The filtergame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "filtergame/params.hpp"
#include "support/brute.hpp"

namespace filtergame {
namespace {

TEST(Thresholds, BaselineValuesMatchLongDoubleEvaluation) {
  const auto p = baseline_params();
  const auto t = thresholds(p);
  const auto ref = brute::thresholds(p);
  EXPECT_NEAR(t.q_H, ref.q_H, 1e-14);
  EXPECT_NEAR(t.q_L, ref.q_L, 1e-14);
  EXPECT_NEAR(t.Lambda, ref.Lambda, 1e-12);
  EXPECT_NEAR(t.q_H, 0.66524, 1e-5);
  EXPECT_NEAR(t.q_L, 0.09003, 1e-5);
  EXPECT_NEAR(t.Lambda, 5.0537, 1e-4);
}

TEST(Thresholds, UninformativeFilterHasUnitQuality) {
  const auto t = thresholds(baseline_params().with_signal(0.5, 0.5));
  EXPECT_EQ(t.Q_quality, 1.0);
}

TEST(Thresholds, InvariantsHoldForRandomParams) {
  brute::ParamSampler s(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = s.draw();
    const auto t = thresholds(p);
    EXPECT_GT(t.q_L, 0.0);
    EXPECT_LT(t.q_L, t.q_H);
    EXPECT_LT(t.q_H, 1.0);
    EXPECT_NEAR(t.q_L, t.q_H * std::exp(-p.c2 / p.lambda), 1e-15);
    EXPECT_GE(t.Q_quality, 1.0);
    const auto ref = brute::thresholds(p);
    EXPECT_NEAR(t.q_H, ref.q_H, 1e-12);
    EXPECT_NEAR(t.Lambda, ref.Lambda, 1e-9 * ref.Lambda);
  }
}

TEST(Thresholds, OverflowNamesTheRatio) {
  auto p = baseline_params();
  p.lambda = 1e-3;
  p.b = 1000.0;
  try {
    thresholds(p);
    FAIL() << "expected overflow";
  } catch (const std::overflow_error& e) {
    EXPECT_NE(std::string(e.what()).find("b/lambda"), std::string::npos) << e.what();
  }
}

TEST(Validate, BaselineIsValid) { EXPECT_TRUE(validate(baseline_params()).empty()); }

TEST(Validate, OrderingViolationIsReported) {
  const auto v = validate(baseline_params().with_signal(0.2, 0.3));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "pi0");
  EXPECT_NE(v[0].message.find("pi0 < pi1"), std::string::npos);
}

TEST(Validate, BoundaryPriorIsReported) {
  const auto v = validate(baseline_params().with_q(1.0));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "q");
  EXPECT_NE(v[0].message.find("q not in open interval"), std::string::npos);
}

TEST(Validate, EveryViolationIsListed) {
  ModelParams p;
  p.q = 0.0;
  p.b = -1.0;
  p.lambda = 0.0;
  p.c2 = NAN;
  EXPECT_EQ(validate(p).size(), 4u);
  EXPECT_THROW(require_valid(p), std::invalid_argument);
}

TEST(UtilityMatrix, EntriesFollowCosts) {
  const auto p = baseline_params();
  const auto m = UtilityMatrix::from(p);
  EXPECT_EQ(m.accept_malicious, -4.0);
  EXPECT_EQ(m.accept_clean, 1.0);
  EXPECT_EQ(m.lost_clean, -1.0);
  EXPECT_EQ(m.lost_malicious, 0.0);
  EXPECT_EQ(m, UtilityMatrix::from(p));
}

TEST(ModelParams, AttackerRateRoundTrips) {
  const auto p = baseline_params().with_q(0.2);
  EXPECT_DOUBLE_EQ(p.rho0(), 0.25);
  EXPECT_DOUBLE_EQ(ModelParams::q_from_rho0(p.rho0()), 0.2);
}

}  // namespace
}  // namespace filtergame
