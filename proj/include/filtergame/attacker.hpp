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

// Endogenous attacker. The attacker picks the malicious rate rho0 (a pure
// strategy) simultaneously with the filter; the consumer sees rho0 and best
// responds. The prior q in the parameter set is ignored: it is always
// derived from rho0. Utilities of filter and consumer are aligned.

#ifndef FILTERGAME_ATTACKER_HPP_
#define FILTERGAME_ATTACKER_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/equilibrium.hpp"
#include "filtergame/payoffs.hpp"

namespace filtergame {

// Rate rho0 at which the forwarded-content belief equals q_L. Higher rates
// make the consumer pay attention and accept less malicious content.
inline double attacker_best_rho(const ModelParams& p, const FilterStrategy& s) {
  if (s.kind() == StrategyKind::kBlock) {
    throw std::domain_error("attacker best response undefined under block-all");
  }
  const auto t = thresholds(p);
  const auto eff = equivalent_signal_quality(p, s);
  const double odds_low = t.q_L / t.q_L_complement;
  if (eff.pi0 == eff.pi1) return odds_low;
  return odds_low * (1.0 - eff.pi1) / (1.0 - eff.pi0);
}

// Attacker payoff at rate rho0 with the consumer best-responding.
inline double attacker_payoff_curve(const ModelParams& p, const FilterStrategy& s, double rho0) {
  if (s.kind() == StrategyKind::kBlock) {
    throw std::domain_error("attacker payoff curve undefined under block-all");
  }
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) {
    throw std::domain_error("attacker rate must be finite and > 0");
  }
  const auto at = p.with_q(ModelParams::q_from_rho0(rho0));
  const auto eff = equivalent_signal_quality(at, s);
  const auto c = best_response(at, posterior(at, s).value);
  return rho0 * (1.0 - eff.pi0) * (1.0 - c.pi_tilde0);
}

struct AttackerEquilibrium {
  bool found = false;
  double rho0_star = 0.0;
  FilterStrategy filter_profile = FilterStrategy::block();
  double q_prior = 0.0;     // P[X = 0] implied by rho0_star
  double q_induced = 0.0;   // forwarded-content belief, recomputed from rho0_star
  double v_players = 0.0;   // per clean item
  double v_attacker = 0.0;
  double consumer_info_cost = 0.0;
  bool knife_edge = false;  // pi0/pi1 == Lambda
  bool forward_sustained = false;
  bool differentiate_sustained = false;
  double fwd_dif_gap = 0.0;  // pi1 (b + c1 - c2 q_L/(1 - q_L))
  // Prior belief a forwarding filter would face at the differentiating
  // equilibrium's rate, and whether it exceeds q_H.
  double q_forward_at_dif_rate = 0.0;
  bool q_forward_at_dif_rate_above_high = false;
  std::string diagnostic;
};

namespace detail {

// Welfare, attacker count and deviation check for a filter profile at the
// attacker's best response. The consumer holds belief q_L and accepts
// everything at zero information cost.
struct AttackerCandidate {
  double rho0 = 0.0;
  double v_players = 0.0;
  double v_attacker = 0.0;
  double q_induced = 0.0;
  bool sustained = false;
  bool knife_edge = false;
  ConsumerPolicy consumer;
};

inline AttackerCandidate attacker_candidate(const ModelParams& base, const FilterStrategy& s) {
  const auto t = thresholds(base);
  AttackerCandidate out;
  out.rho0 = attacker_best_rho(base, s);
  const auto at = base.with_q(ModelParams::q_from_rho0(out.rho0));
  out.q_induced = posterior(at, s).value;
  out.consumer = best_response(at, t.q_L);
  const double per_content = filter_payoff_against(at, s, out.consumer, Utilities::kAligned);
  out.v_players = per_content / (1.0 - at.q);
  const auto eff = equivalent_signal_quality(at, s);
  out.v_attacker = out.rho0 * (1.0 - eff.pi0) * (1.0 - out.consumer.pi_tilde0);
  const auto check = [&] {
    EquilibriumCheck c;
    c.deviation_gain = -INFINITY;
    for (const auto& d : deviation_set(s)) {
      if (d == s) continue;
      const double gain = filter_payoff_against(at, d, out.consumer, Utilities::kAligned) -
                          per_content;
      if (std::abs(gain) <= kKnifeEdgeTolerance) c.knife_edge = true;
      c.deviation_gain = std::max(c.deviation_gain, gain);
    }
    c.is_equilibrium = c.deviation_gain <= kKnifeEdgeTolerance;
    return c;
  }();
  out.sustained = check.is_equilibrium;
  out.knife_edge = check.knife_edge;
  return out;
}

}  // namespace detail

// The equilibrium best for filter and consumer. Forwarding at the q_L rate
// is preferred whenever it is sustained; otherwise differentiating at its
// own q_L rate.
inline AttackerEquilibrium endogenous_equilibrium(const ModelParams& p) {
  // q is irrelevant here; validate everything else.
  require_valid(p.with_q(0.5));
  const auto t = thresholds(p);
  const double odds_low = t.q_L / t.q_L_complement;
  const auto fwd = detail::attacker_candidate(p, FilterStrategy::forward());
  const auto dif = detail::attacker_candidate(p, FilterStrategy::differentiate());

  AttackerEquilibrium out;
  out.forward_sustained = fwd.sustained;
  out.differentiate_sustained = dif.sustained;
  out.fwd_dif_gap = p.pi1 * (p.b + p.c1 - p.c2 * odds_low);
  out.knife_edge = p.pi0 / p.pi1 == t.Lambda;
  out.q_forward_at_dif_rate = ModelParams::q_from_rho0(dif.rho0);
  out.q_forward_at_dif_rate_above_high = out.q_forward_at_dif_rate > t.q_H;

  const detail::AttackerCandidate* chosen = nullptr;
  if (fwd.sustained) {
    chosen = &fwd;
    out.filter_profile = FilterStrategy::forward();
  } else if (dif.sustained) {
    chosen = &dif;
    out.filter_profile = FilterStrategy::differentiate();
  }
  if (chosen == nullptr) {
    out.found = false;
    out.filter_profile = FilterStrategy::block();
    out.v_players = -p.c1;
    out.diagnostic = "neither forward nor differentiate is sustained; reporting block-all";
    return out;
  }
  out.found = true;
  out.rho0_star = chosen->rho0;
  out.q_prior = ModelParams::q_from_rho0(chosen->rho0);
  out.q_induced = chosen->q_induced;
  out.v_players = chosen->v_players;
  out.v_attacker = chosen->v_attacker;
  out.consumer_info_cost = chosen->consumer.info_cost;
  if (out.knife_edge) out.diagnostic = "pi0/pi1 equals Lambda exactly";
  return out;
}

struct NegativeVotcScan {
  bool found = false;
  double pi0_before = 0.0;
  double pi1_before = 0.0;
  double pi0_after = 0.0;
  double pi1_after = 0.0;
  double pi0_crossing = 0.0;  // point on the ray where pi0/pi1 = Lambda
  double pi1_crossing = 0.0;
  double v_before = 0.0;
  double v_after = 0.0;
  double v_drop = 0.0;
  std::string diagnostic;
};

// Walks the ray that shrinks (1 - pi0) and pi1 by a common factor, in
// geometric steps, until the forwarding equilibrium disappears. The point
// where pi0/pi1 crosses Lambda is then located by bisection.
inline NegativeVotcScan negative_votc_scan(const ModelParams& p, double step_factor = 0.5,
                                           int max_steps = 60) {
  require_valid(p.with_q(0.5));
  const auto t = thresholds(p);
  NegativeVotcScan out;
  out.pi0_before = p.pi0;
  out.pi1_before = p.pi1;
  if (!(p.pi0 / p.pi1 < t.Lambda)) {
    out.diagnostic = "precondition violated: pi0/pi1 >= Lambda";
    return out;
  }
  const auto before = endogenous_equilibrium(p);
  out.v_before = before.v_players;

  auto point = [&](double shrink) {
    return p.with_signal(1.0 - (1.0 - p.pi0) * shrink, p.pi1 * shrink);
  };
  auto past_crossing = [&](double shrink) {
    const auto pt = point(shrink);
    return pt.pi0 / pt.pi1 > t.Lambda;
  };
  double prev = 1.0;
  double shrink = 1.0;
  for (int i = 0; i < max_steps; ++i) {
    shrink *= step_factor;
    if (past_crossing(shrink)) break;
    prev = shrink;
  }
  if (!past_crossing(shrink)) {
    out.diagnostic = "no crossing found along the improvement ray";
    return out;
  }
  const double crossing = bisect_boundary(past_crossing, shrink, prev);
  out.pi0_crossing = point(crossing).pi0;
  out.pi1_crossing = point(crossing).pi1;

  const auto after_params = point(shrink);
  const auto after = endogenous_equilibrium(after_params);
  out.pi0_after = after_params.pi0;
  out.pi1_after = after_params.pi1;
  out.v_after = after.v_players;
  out.v_drop = out.v_before - out.v_after;
  out.found = after.found && out.v_drop > 0.0;
  if (!out.found) out.diagnostic = "equilibrium welfare did not drop";
  return out;
}

}  // namespace filtergame

#endif  // FILTERGAME_ATTACKER_HPP_
