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

#ifndef FILTERGAME_PAYOFFS_HPP_
#define FILTERGAME_PAYOFFS_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/numeric.hpp"
#include "filtergame/params.hpp"

namespace filtergame {

// Aligned: the filter internalizes the consumer's information cost.
// Semi-aligned: the filter's payoff is the expected action payoff only.
enum class Utilities { kAligned, kSemiAligned };

// PerClean divides per-content payoffs by (1 - q); a batch holds one clean
// item on average.
enum class Normalization { kPerClean, kPerContent };

inline std::string to_string(Utilities u) {
  return u == Utilities::kAligned ? "aligned" : "semi";
}
inline std::string to_string(Normalization n) {
  return n == Normalization::kPerClean ? "per-clean" : "per-content";
}

inline double normalization_scale(const ModelParams& p, Normalization n) {
  return n == Normalization::kPerClean ? 1.0 / (1.0 - p.q) : 1.0;
}

struct ProfileEvaluation {
  FilterStrategy strategy = FilterStrategy::forward();
  Utilities utilities = Utilities::kAligned;
  Normalization normalization = Normalization::kPerClean;
  double v_filter = 0.0;
  double v_consumer = 0.0;
  double v_attacker = 0.0;  // accepted malicious items per batch, never normalized
  double info_cost = 0.0;
  double forward_prob = 0.0;
  std::optional<ConsumerPolicy> consumer;  // empty when nothing is forwarded
};

// Expected gain in action payoff from differentiating instead of forwarding
// when the consumer accepts everything.
inline double delta_u(const ModelParams& p) {
  return p.pi0 * p.q * p.c2 - p.pi1 * (1.0 - p.q) * (p.b + p.c1);
}

// Ex ante probability that a differentiating filter forwards.
inline double differentiate_forward_prob(const ModelParams& p) {
  return (1.0 - p.pi0) * p.q + (1.0 - p.pi1) * (1.0 - p.q);
}

namespace detail {

struct PerContent {
  double filter_action = 0.0;
  double info_cost = 0.0;
  double attacker = 0.0;
  double forward_prob = 0.0;
  std::optional<ConsumerPolicy> consumer;
};

inline ProfileEvaluation finish(const ModelParams& p, const FilterStrategy& s,
                                Utilities u, Normalization n, const PerContent& pc) {
  const double scale = normalization_scale(p, n);
  ProfileEvaluation ev;
  ev.strategy = s;
  ev.utilities = u;
  ev.normalization = n;
  ev.v_consumer = (pc.filter_action - pc.info_cost) * scale;
  ev.v_filter = u == Utilities::kAligned ? ev.v_consumer : pc.filter_action * scale;
  ev.info_cost = pc.info_cost * scale;
  ev.v_attacker = pc.attacker;
  ev.forward_prob = pc.forward_prob;
  ev.consumer = pc.consumer;
  return ev;
}

inline PerContent block_all(const ModelParams& p) {
  PerContent pc;
  pc.filter_action = -p.c1 * (1.0 - p.q);
  return pc;
}

// Action payoff of one forwarded item from the affine joint masses.
inline double interior_action_payoff(const ModelParams& p, double belief) {
  const auto m = linear_identities(p, belief);
  return -p.c2 * m.accept_malicious - p.c1 * m.ignore_clean + p.b * m.accept_clean;
}

}  // namespace detail

// Evaluates any filter strategy by building the consumer's best response
// and averaging over states. Works for every pure and mixed strategy.
inline ProfileEvaluation evaluate_via_policy(const ModelParams& p, const FilterStrategy& s,
                                             Utilities u,
                                             Normalization n = Normalization::kPerClean) {
  require_valid(p);
  const auto eff = equivalent_signal_quality(p, s);
  const double forward = (1.0 - eff.pi0) * p.q + (1.0 - eff.pi1) * (1.0 - p.q);
  if (s.kind() == StrategyKind::kBlock || !(forward >= kMinForwardProb)) {
    return detail::finish(p, s, u, n, detail::block_all(p));
  }
  const auto belief = posterior(p, s);
  const auto c = best_response(p, belief.value);
  detail::PerContent pc;
  pc.forward_prob = belief.forward_prob;
  pc.filter_action = -p.c1 * (1.0 - p.q) * eff.pi1 + belief.forward_prob * action_payoff(p, c);
  pc.info_cost = belief.forward_prob * c.info_cost;
  pc.attacker = p.rho0() * (1.0 - eff.pi0) * (1.0 - c.pi_tilde0);
  pc.consumer = c;
  return detail::finish(p, s, u, n, pc);
}

// Evaluates a strategy profile with the consumer best-responding. Forward
// and Differentiate use the closed forms for their belief regime; Block is
// the constant -c1 per clean item; other strategies go through
// evaluate_via_policy.
inline ProfileEvaluation evaluate(const ModelParams& p, const FilterStrategy& s, Utilities u,
                                  Normalization n = Normalization::kPerClean) {
  require_valid(p);
  const auto kind = s.kind();
  if (kind == StrategyKind::kBlock) return detail::finish(p, s, u, n, detail::block_all(p));
  if (kind != StrategyKind::kForward && kind != StrategyKind::kDifferentiate) {
    return evaluate_via_policy(p, s, u, n);
  }

  const auto t = thresholds(p);
  const auto belief = posterior(p, s);
  const double qhat = belief.value;
  const auto c = best_response(p, qhat);
  const double beta = belief.forward_prob;
  const double blocked_clean = kind == StrategyKind::kDifferentiate ? p.pi1 : 0.0;
  const double passed_malicious = kind == StrategyKind::kDifferentiate ? 1.0 - p.pi0 : 1.0;

  detail::PerContent pc;
  pc.forward_prob = beta;
  pc.consumer = c;
  pc.info_cost = beta * c.info_cost;
  pc.attacker = p.rho0() * passed_malicious * (1.0 - c.pi_tilde0);

  switch (c.mode) {
    case ConsumerMode::kAcceptAll:
      pc.filter_action = (1.0 - p.q) * blocked_clean * (-p.c1) +
                         (1.0 - p.q) * (1.0 - blocked_clean) * p.b -
                         p.q * passed_malicious * p.c2;
      break;
    case ConsumerMode::kIgnoreAll:
      pc.filter_action = -p.c1 * (1.0 - p.q);
      break;
    case ConsumerMode::kInterior: {
      pc.filter_action = -p.c1 * (1.0 - p.q) * blocked_clean +
                         beta * detail::interior_action_payoff(p, qhat);
      if (u == Utilities::kAligned) {
        // Closed forms for the aligned welfare; the info cost is whatever
        // separates them from the action payoff.
        double welfare = 0.0;
        if (kind == StrategyKind::kForward) {
          welfare = value_hat(p, p.q);
        } else {
          welfare = -p.c1 * (1.0 - p.q) + beta * p.lambda * kl_bernoulli(qhat, t.q_H, t.q_H_complement);
        }
        auto ev = detail::finish(p, s, u, n, pc);
        const double scale = normalization_scale(p, n);
        ev.v_filter = ev.v_consumer = welfare * scale;
        return ev;
      }
      break;
    }
  }
  return detail::finish(p, s, u, n, pc);
}

// Accepted malicious items per batch when the consumer best-responds.
inline double attacker_payoff(const ModelParams& p, const FilterStrategy& s) {
  return evaluate_via_policy(p, s, Utilities::kAligned).v_attacker;
}

// Per-content payoff to the filter from playing `s` while the consumer keeps
// the channel `c` (chosen for some other strategy). In aligned mode the
// consumer's realized information cost on the content actually forwarded is
// charged to the filter.
inline double filter_payoff_against(const ModelParams& p, const FilterStrategy& s,
                                    const ConsumerPolicy& c, Utilities u) {
  const auto eff = equivalent_signal_quality(p, s);
  const double fwd_mal = (1.0 - eff.pi0) * p.q;
  const double fwd_clean = (1.0 - eff.pi1) * (1.0 - p.q);
  double payoff = -p.c1 * (1.0 - p.q) * eff.pi1 +
                  fwd_mal * (1.0 - c.pi_tilde0) * (-p.c2) +
                  fwd_clean * (c.pi_tilde1 * (-p.c1) + (1.0 - c.pi_tilde1) * p.b);
  const double forward = fwd_mal + fwd_clean;
  if (u == Utilities::kAligned && forward > 0.0) {
    payoff -= forward * p.lambda *
              mutual_information(fwd_mal / forward, c.pi_tilde0, c.pi_tilde1);
  }
  return payoff;
}

}  // namespace filtergame

#endif  // FILTERGAME_PAYOFFS_HPP_
