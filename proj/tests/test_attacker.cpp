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
#include <string>

#include "filtergame/attacker.hpp"
#include "filtergame/oracle.hpp"
#include "support/brute.hpp"

namespace filtergame {
namespace {

// Accepted malicious items per batch at rate rho, with the forwarded belief
// from enumeration.
double brute_attacker_payoff(const ModelParams& p, double g0, double g1, double rho) {
  const auto at = p.with_q(rho / (1 + rho));
  const auto post = brute::posterior(at, g0, g1);
  const auto c = best_response(at, post.value);
  const double passed_mal = p.pi0 * (1 - g0) + (1 - p.pi0) * (1 - g1);
  return rho * passed_mal * (1 - c.pi_tilde0);
}

// 1000-point log grid on [1e-3, 1e3] refined by golden section between the
// neighbours of the best grid point.
double brute_best_rho(const ModelParams& p, double g0, double g1) {
  const int n = 1000;
  auto at = [&](int i) { return -3.0 * std::log(10.0) + 6.0 * std::log(10.0) * i / (n - 1); };
  int best = 0;
  double best_v = -1;
  for (int i = 0; i < n; ++i) {
    const double v = brute_attacker_payoff(p, g0, g1, std::exp(at(i)));
    if (v > best_v) best_v = v, best = i;
  }
  double lo = at(std::max(best - 1, 0)), hi = at(std::min(best + 1, n - 1));
  const double r = (std::sqrt(5.0) - 1) / 2;
  for (int i = 0; i < 200; ++i) {
    const double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    if (brute_attacker_payoff(p, g0, g1, std::exp(a)) <
        brute_attacker_payoff(p, g0, g1, std::exp(b))) {
      lo = a;
    } else {
      hi = b;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

ModelParams attacker_sample(brute::ParamSampler& s) {
  auto p = s.draw();
  p.q = 0.5;
  return p;
}

TEST(AttackerBestRho, Baseline) {
  const auto p = baseline_params();
  const auto t = brute::thresholds(p);
  const double odds = t.q_L / (1 - t.q_L);
  EXPECT_NEAR(attacker_best_rho(p, FilterStrategy::forward()), odds, 1e-12);
  EXPECT_NEAR(attacker_best_rho(p, FilterStrategy::forward()), 0.098938, 1e-6);
  EXPECT_NEAR(attacker_best_rho(p, FilterStrategy::differentiate()), odds * 0.7 / 0.2, 1e-12);
}

TEST(AttackerBestRho, MatchesLogGridSearch) {
  brute::ParamSampler s(71);
  for (int i = 0; i < 20; ++i) {
    const auto p = attacker_sample(s);
    for (const auto& g : {std::pair{0.0, 0.0}, std::pair{1.0, 0.0}}) {
      const auto strat = FilterStrategy::mixed(g.first, g.second);
      const double analytic = attacker_best_rho(p, strat);
      if (analytic < 1e-3 || analytic > 1e3) continue;
      const double ref = brute_best_rho(p, g.first, g.second);
      EXPECT_NEAR(analytic, ref, 1e-4 * std::max(1.0, ref));
      EXPECT_NEAR(analytic, numeric_attacker_br(p, strat), 1e-4 * std::max(1.0, ref));
    }
  }
}

TEST(AttackerBestRho, BlockIsUndefined) {
  EXPECT_THROW(attacker_best_rho(baseline_params(), FilterStrategy::block()), std::domain_error);
  EXPECT_THROW(attacker_payoff_curve(baseline_params(), FilterStrategy::forward(), 0.0),
               std::domain_error);
}

TEST(AttackerPayoffCurve, PeaksAtBestRho) {
  const auto p = baseline_params();
  for (const auto& s : {FilterStrategy::forward(), FilterStrategy::differentiate()}) {
    const double rho = attacker_best_rho(p, s);
    const double peak = attacker_payoff_curve(p, s, rho);
    EXPECT_LT(attacker_payoff_curve(p, s, rho * 0.99), peak);
    EXPECT_LT(attacker_payoff_curve(p, s, rho * 1.01), peak);
  }
}

TEST(EndogenousEquilibrium, Baseline) {
  const auto p = baseline_params();
  const auto t = brute::thresholds(p);
  const auto e = endogenous_equilibrium(p);
  ASSERT_TRUE(e.found);
  EXPECT_EQ(e.filter_profile.kind(), StrategyKind::kForward);
  EXPECT_NEAR(e.q_induced, t.q_L, 1e-9);
  EXPECT_EQ(e.consumer_info_cost, 0.0);
  const double odds = t.q_L / (1 - t.q_L);
  EXPECT_NEAR(e.v_players, p.b - p.c2 * odds, 1e-12);
  EXPECT_NEAR(e.fwd_dif_gap, p.pi1 * (p.b + p.c1 - p.c2 * odds), 1e-12);
  EXPECT_NEAR(e.fwd_dif_gap, 0.4813, 1e-4);
  EXPECT_FALSE(e.knife_edge);
}

TEST(EndogenousEquilibrium, InducedBeliefIsLowThresholdWithoutAttention) {
  brute::ParamSampler s(72);
  int found = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto p = attacker_sample(s);
    const auto e = endogenous_equilibrium(p);
    if (!e.found) continue;
    ++found;
    EXPECT_NEAR(e.q_induced, brute::thresholds(p).q_L, 1e-9);
    EXPECT_EQ(e.consumer_info_cost, 0.0);
  }
  EXPECT_GT(found, 1000);
}

TEST(EndogenousEquilibrium, ExistenceConditions) {
  brute::ParamSampler s(73);
  for (int i = 0; i < 2000; ++i) {
    const auto p = attacker_sample(s);
    const auto t = brute::thresholds(p);
    const auto e = endogenous_equilibrium(p);
    const double ratio = p.pi0 / p.pi1;
    if (std::abs(ratio - t.Lambda) > 1e-9 * t.Lambda) {
      EXPECT_EQ(e.forward_sustained, ratio < t.Lambda) << ratio << " " << t.Lambda;
    }
    if (std::abs(t.Q - t.Lambda) > 1e-9 * t.Lambda) {
      EXPECT_EQ(e.differentiate_sustained, t.Q > t.Lambda) << t.Q << " " << t.Lambda;
    }
    if (e.found) {
      EXPECT_EQ(e.filter_profile.kind(), e.forward_sustained ? StrategyKind::kForward
                                                             : StrategyKind::kDifferentiate);
    } else {
      EXPECT_FALSE(e.diagnostic.empty());
    }
  }
}

TEST(EndogenousEquilibrium, ForwardWelfareIgnoresFilterQuality) {
  const auto base = baseline_params();
  const double v0 = endogenous_equilibrium(base).v_players;
  const auto t = thresholds(base);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      const auto p = base.with_signal(0.02 + 0.032 * i, 0.02 + 0.032 * j);
      if (!validate(p).empty() || !(p.pi0 / p.pi1 < t.Lambda)) continue;
      const auto e = endogenous_equilibrium(p);
      ASSERT_EQ(e.filter_profile.kind(), StrategyKind::kForward);
      EXPECT_NEAR(e.v_players, v0, 1e-12);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EndogenousEquilibrium, GapIsForwardMinusDifferentiateWelfare) {
  brute::ParamSampler s(74);
  for (int i = 0; i < 200; ++i) {
    const auto p = attacker_sample(s);
    const auto t = brute::thresholds(p);
    const auto e = endogenous_equilibrium(p);
    const auto fwd = detail::attacker_candidate(p, FilterStrategy::forward());
    const auto dif = detail::attacker_candidate(p, FilterStrategy::differentiate());
    const double odds = t.q_L / (1 - t.q_L);
    EXPECT_NEAR(e.fwd_dif_gap, p.pi1 * (p.b + p.c1 - p.c2 * odds), 1e-9);
    EXPECT_NEAR(e.fwd_dif_gap, fwd.v_players - dif.v_players, 1e-9);
  }
}

TEST(EndogenousEquilibrium, DifferentiateRateRaisesForwardBelief) {
  const auto e = endogenous_equilibrium(baseline_params());
  EXPECT_NEAR(e.q_forward_at_dif_rate, 0.2572, 1e-4);
  EXPECT_FALSE(e.q_forward_at_dif_rate_above_high);
}

TEST(NegativeVotc, BaselineScanFindsWelfareDrop) {
  const auto p = baseline_params();
  const auto scan = negative_votc_scan(p);
  ASSERT_TRUE(scan.found) << scan.diagnostic;
  EXPECT_GT(scan.v_drop, 0.0);
  // The new point is a strict improvement in both coordinates.
  EXPECT_GT(scan.pi0_after, scan.pi0_before);
  EXPECT_LT(scan.pi1_after, scan.pi1_before);
  const auto t = thresholds(p);
  EXPECT_NEAR(scan.pi0_crossing / scan.pi1_crossing, t.Lambda, 1e-6 * t.Lambda);
  EXPECT_GT(scan.pi0_after / scan.pi1_after, t.Lambda);
  EXPECT_NEAR(scan.v_before - scan.v_after, scan.v_drop, 1e-15);
  EXPECT_NEAR(scan.v_after, endogenous_equilibrium(p.with_signal(scan.pi0_after, scan.pi1_after)).v_players,
              1e-15);
}

TEST(NegativeVotc, PreconditionFailure) {
  const auto scan = negative_votc_scan(baseline_params().with_signal(0.99, 0.01));
  EXPECT_FALSE(scan.found);
  EXPECT_NE(scan.diagnostic.find("precondition"), std::string::npos);
}

}  // namespace
}  // namespace filtergame
