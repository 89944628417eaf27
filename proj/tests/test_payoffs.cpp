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

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/payoffs.hpp"
#include "support/brute.hpp"

namespace filtergame {
namespace {

// Exact per-content expectation of a profile, from enumeration, with the
// consumer's channel found by pattern search on the brute objective.
brute::Expectation brute_profile(const ModelParams& p, const FilterStrategy& s) {
  const auto post = brute::posterior(p, s.gamma0(), s.gamma1());
  const auto ch = brute::nested_max(p, post.value);
  const double cost = p.lambda * brute::mutual_information(post.value, ch.t0, ch.t1);
  return brute::expectation(p, s.gamma0(), s.gamma1(), ch.t0, ch.t1, cost);
}

TEST(Evaluate, BaselineForward) {
  const auto p = baseline_params();
  const auto ev = evaluate(p, FilterStrategy::forward(), Utilities::kAligned);
  EXPECT_NEAR(ev.v_filter, value_hat(p, 0.5) / 0.5, 1e-15);
  EXPECT_NEAR(ev.v_filter, -0.76876, 1e-3);
  EXPECT_NEAR(ev.v_filter, -0.76868824, 1e-8);
  EXPECT_EQ(ev.v_filter, ev.v_consumer);
  const auto ref = brute_profile(p, FilterStrategy::forward());
  EXPECT_NEAR(ev.v_filter, (ref.action - ref.cost) / (1 - p.q), 1e-8);
}

TEST(Evaluate, BaselineDifferentiate) {
  const auto p = baseline_params();
  const auto ev = evaluate(p, FilterStrategy::differentiate(), Utilities::kAligned);
  const auto t = thresholds(p);
  EXPECT_NEAR(kl_bernoulli(2.0 / 9.0, t.q_H), 0.41202956, 1e-8);
  EXPECT_NEAR(ev.v_filter, -1 + 2 * 0.45 * 2 * kl_bernoulli(2.0 / 9.0, t.q_H), 1e-12);
  EXPECT_NEAR(ev.v_filter, -0.25840, 1e-3);
  EXPECT_NEAR(ev.v_filter, -0.25834678, 1e-8);
  const auto ref = brute_profile(p, FilterStrategy::differentiate());
  EXPECT_NEAR(ev.v_filter, (ref.action - ref.cost) / (1 - p.q), 1e-8);
}

TEST(Evaluate, BlockIsConstant) {
  brute::ParamSampler s(41);
  for (int i = 0; i < 50; ++i) {
    const auto p = s.draw();
    for (auto u : {Utilities::kAligned, Utilities::kSemiAligned}) {
      const auto ev = evaluate(p, FilterStrategy::block(), u);
      EXPECT_DOUBLE_EQ(ev.v_filter, -p.c1);
      EXPECT_DOUBLE_EQ(ev.v_consumer, -p.c1);
      EXPECT_EQ(ev.info_cost, 0.0);
      EXPECT_EQ(ev.v_attacker, 0.0);
      EXPECT_FALSE(ev.consumer.has_value());
    }
  }
}

TEST(Evaluate, MatchesEnumerationForPureAndMixedProfiles) {
  brute::ParamSampler s(42);
  for (int i = 0; i < 40; ++i) {
    const auto p = s.draw();
    const FilterStrategy profiles[] = {
        FilterStrategy::forward(), FilterStrategy::differentiate(),
        FilterStrategy::unreasonable(),
        FilterStrategy::mixed(s.uniform(0, 1), s.uniform(0, 0.95))};
    for (const auto& prof : profiles) {
      const auto ref = brute_profile(p, prof);
      const auto aligned = evaluate(p, prof, Utilities::kAligned);
      const auto semi = evaluate(p, prof, Utilities::kSemiAligned);
      const double scale = 1.0 / (1 - p.q);
      EXPECT_NEAR(aligned.v_filter, (ref.action - ref.cost) * scale, 1e-7) << prof.name();
      EXPECT_NEAR(semi.v_filter, ref.action * scale, 2e-5) << prof.name();
      EXPECT_NEAR(semi.v_consumer, aligned.v_consumer, 1e-12);
      EXPECT_NEAR(aligned.v_attacker, ref.attacker * scale, 2e-5) << prof.name();
    }
  }
}

TEST(Evaluate, ClosedFormsAgreeWithPolicyPath) {
  brute::ParamSampler s(43);
  for (int i = 0; i < 500; ++i) {
    const auto p = s.draw();
    for (const auto& prof : {FilterStrategy::forward(), FilterStrategy::differentiate()}) {
      for (auto u : {Utilities::kAligned, Utilities::kSemiAligned}) {
        const auto a = evaluate(p, prof, u);
        const auto b = evaluate_via_policy(p, prof, u);
        EXPECT_NEAR(a.v_filter, b.v_filter, 1e-9);
        EXPECT_NEAR(a.v_consumer, b.v_consumer, 1e-9);
        EXPECT_NEAR(a.v_attacker, b.v_attacker, 1e-12);
      }
    }
  }
}

TEST(Evaluate, NormalizationConsistency) {
  brute::ParamSampler s(44);
  for (int i = 0; i < 200; ++i) {
    const auto p = s.draw();
    for (const auto& prof : {FilterStrategy::forward(), FilterStrategy::differentiate(),
                             FilterStrategy::block(), FilterStrategy::mixed(0.4, 0.1)}) {
      for (auto u : {Utilities::kAligned, Utilities::kSemiAligned}) {
        const auto clean = evaluate(p, prof, u, Normalization::kPerClean);
        const auto content = evaluate(p, prof, u, Normalization::kPerContent);
        EXPECT_NEAR(content.v_filter / (1 - p.q), clean.v_filter, 1e-12);
        EXPECT_NEAR(content.v_consumer / (1 - p.q), clean.v_consumer, 1e-12);
        EXPECT_NEAR(content.info_cost / (1 - p.q), clean.info_cost, 1e-12);
        EXPECT_EQ(content.v_attacker, clean.v_attacker);
      }
    }
  }
}

TEST(Evaluate, DifferentiateCrossFormCheck) {
  brute::ParamSampler s(45);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const auto p = s.draw();
    const auto t = thresholds(p);
    const auto d = differentiate_posterior(p);
    if (!(d.value > t.q_L && d.value < t.q_H)) continue;
    ++checked;
    const double expanded =
        ((1 - p.q) * p.pi1 * -p.c1 + d.forward_prob * value_hat(p, d.value)) / (1 - p.q);
    EXPECT_NEAR(evaluate(p, FilterStrategy::differentiate(), Utilities::kAligned).v_filter,
                expanded, 1e-9);
  }
  EXPECT_GT(checked, 50);
}

TEST(Evaluate, AlignedFilterEqualsConsumerAndInfoCostNonnegative) {
  brute::ParamSampler s(46);
  for (int i = 0; i < 300; ++i) {
    const auto p = s.draw();
    const auto prof = FilterStrategy::mixed(s.uniform(0, 1), s.uniform(0, 0.99));
    const auto a = evaluate(p, prof, Utilities::kAligned);
    EXPECT_EQ(a.v_filter, a.v_consumer);
    EXPECT_GE(a.info_cost, 0.0);
    const auto sm = evaluate(p, prof, Utilities::kSemiAligned);
    EXPECT_NEAR(sm.v_filter - sm.info_cost, sm.v_consumer, 1e-12);
  }
}

TEST(Evaluate, SemiFilterPayoffIsAffineInBlockingWithinRegime) {
  const auto p = baseline_params();
  auto v = [&](double g) {
    return evaluate(p, FilterStrategy::mixed(g, 0.0), Utilities::kSemiAligned).v_filter;
  };
  const auto t = thresholds(p);
  // All three strategies keep the posterior inside (q_L, q_H).
  for (double g : {0.2, 0.4, 0.6}) {
    const double b = posterior(p, FilterStrategy::mixed(g, 0.0)).value;
    ASSERT_GT(b, t.q_L);
    ASSERT_LT(b, t.q_H);
  }
  EXPECT_NEAR(v(0.4), 0.5 * (v(0.2) + v(0.6)), 1e-9);
}

TEST(DeltaU, Examples) {
  const auto p = baseline_params();
  EXPECT_NEAR(delta_u(p), 1.30, 1e-12);
  const auto flat = p.with_signal(0.4, 0.4);
  EXPECT_NEAR(delta_u(flat), 0.4 * (p.q * p.c2 - (1 - p.q) * (p.b + p.c1)), 1e-12);
}

TEST(DeltaU, EqualsActionGainAgainstAcceptingConsumer) {
  brute::ParamSampler s(47);
  for (int i = 0; i < 200; ++i) {
    const auto p = s.draw();
    const auto dif = brute::expectation(p, 1, 0, 0, 0, 0);
    const auto fwd = brute::expectation(p, 0, 0, 0, 0, 0);
    EXPECT_NEAR(delta_u(p), dif.action - fwd.action, 1e-12);
  }
}

TEST(AttackerPayoff, Examples) {
  const auto p = baseline_params();
  EXPECT_NEAR(attacker_payoff(p, FilterStrategy::forward()), 0.05172625, 1e-8);
  EXPECT_EQ(attacker_payoff(p, FilterStrategy::block()), 0.0);
  const auto low = p.with_q(0.05);
  EXPECT_NEAR(attacker_payoff(low, FilterStrategy::forward()), low.rho0(), 1e-15);
}

}  // namespace
}  // namespace filtergame
