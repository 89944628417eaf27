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

#ifndef FILTERGAME_EQUILIBRIUM_HPP_
#define FILTERGAME_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/numeric.hpp"
#include "filtergame/payoffs.hpp"
#include "filtergame/vot.hpp"

namespace filtergame {

// Deviation gains within this band are ties; the profile is still an
// equilibrium but is flagged knife-edge.
inline constexpr double kKnifeEdgeTolerance = 1e-12;

// Indifference tolerance for the semi-aligned mixed equilibrium.
inline constexpr double kMixedIndifferenceTolerance = 1e-9;

struct EquilibriumCheck {
  bool is_equilibrium = false;
  bool knife_edge = false;
  FilterStrategy best_deviation = FilterStrategy::forward();
  double deviation_gain = 0.0;  // best deviation payoff minus own, per content
};

// The consumer channel that sustains a profile: the best response to the
// forwarded-content belief, or ignore-everything under block-all where the
// belief is undefined.
inline ConsumerPolicy sustaining_policy(const ModelParams& p, const FilterStrategy& s) {
  const auto eff = equivalent_signal_quality(p, s);
  const double forward = (1.0 - eff.pi0) * p.q + (1.0 - eff.pi1) * (1.0 - p.q);
  if (s.kind() == StrategyKind::kBlock || !(forward >= kMinForwardProb)) {
    ConsumerPolicy c;
    c.belief = p.q;
    c.mode = ConsumerMode::kIgnoreAll;
    c.pi_tilde0 = c.pi_tilde1 = 1.0;
    return c;
  }
  return best_response(p, posterior(p, s).value);
}

// Unilateral filter deviations against a fixed consumer channel: the four
// pure strategies plus +/- 0.05 grid perturbations of `s`. The filter's
// payoff is convex in its own mixing probabilities when the channel is held
// fixed, so the pure strategies carry the maximum.
inline std::vector<FilterStrategy> deviation_set(const FilterStrategy& s) {
  std::vector<FilterStrategy> out = {FilterStrategy::forward(), FilterStrategy::block(),
                                     FilterStrategy::differentiate(),
                                     FilterStrategy::unreasonable()};
  constexpr double kStep = 0.05;
  for (double d0 : {-kStep, 0.0, kStep}) {
    for (double d1 : {-kStep, 0.0, kStep}) {
      if (d0 == 0.0 && d1 == 0.0) continue;
      out.push_back(FilterStrategy::mixed(std::clamp(s.gamma0() + d0, 0.0, 1.0),
                                          std::clamp(s.gamma1() + d1, 0.0, 1.0)));
    }
  }
  return out;
}

inline EquilibriumCheck check_equilibrium(const ModelParams& p, const FilterStrategy& s,
                                          Utilities u,
                                          double tolerance = kKnifeEdgeTolerance) {
  const auto c = sustaining_policy(p, s);
  const double own = filter_payoff_against(p, s, c, u);
  EquilibriumCheck out;
  out.deviation_gain = -INFINITY;
  for (const auto& d : deviation_set(s)) {
    if (d == s) continue;
    const double gain = filter_payoff_against(p, d, c, u) - own;
    if (std::abs(gain) <= tolerance) out.knife_edge = true;
    if (gain > out.deviation_gain) {
      out.deviation_gain = gain;
      out.best_deviation = d;
    }
  }
  out.is_equilibrium = out.deviation_gain <= tolerance;
  return out;
}

enum class SelectionRule { kSociallyOptimal, kParetoDominant, kNone };

inline std::string to_string(SelectionRule r) {
  switch (r) {
    case SelectionRule::kSociallyOptimal: return "socially-optimal";
    case SelectionRule::kParetoDominant: return "pareto-dominant";
    case SelectionRule::kNone: return "none";
  }
  return "?";
}

struct ProfileStatus {
  FilterStrategy strategy = FilterStrategy::forward();
  ProfileEvaluation evaluation;
  EquilibriumCheck check;
};

// Which case of the differentiate-versus-forward comparison applies, and
// whether its inequality holds. Case 'a': q >= q_H. Case 'b': q_dif in
// (q_L, q) with q < q_H. Case 'c': q_dif <= q_L < q < q_H. Case 'd': q <= q_L.
struct DiffCondition {
  char label = 'a';
  bool holds = false;
  double delta_u = 0.0;
  double rhs = 0.0;
};

inline DiffCondition diff_vs_fwd_condition(const ModelParams& p) {
  require_valid(p);
  const auto t = thresholds(p);
  const auto dif = differentiate_posterior(p);
  DiffCondition out;
  out.delta_u = delta_u(p);
  if (p.q >= t.q_H) {
    out.label = 'a';
    out.holds = true;
    return out;
  }
  if (p.q <= t.q_L) {
    out.label = 'd';
    out.rhs = 0.0;
  } else if (dif.value <= t.q_L) {
    out.label = 'c';
    out.rhs = p.lambda * kl_bernoulli(p.q, t.q_L, t.q_L_complement);
  } else {
    out.label = 'b';
    out.rhs = p.lambda * (kl_bernoulli(p.q, t.q_L, t.q_L_complement) -
                          dif.forward_prob * kl_bernoulli(dif.value, t.q_L, t.q_L_complement));
  }
  out.holds = out.delta_u > out.rhs;
  return out;
}

struct EquilibriumReport {
  Utilities utilities = Utilities::kAligned;
  std::vector<ProfileStatus> profiles;
  std::optional<FilterStrategy> selected;
  SelectionRule selection_rule = SelectionRule::kNone;
  bool inefficiency = false;
  std::optional<double> mixed_gamma;
  std::optional<DiffCondition> certificate;  // aligned only

  // Semi-aligned closed-form conditions and whether they apply here.
  bool dif_condition = false;          // Q_quality > Lambda
  bool fwd_condition = false;          // pi0/pi1 < Lambda
  bool dif_condition_applies = false;  // q_L < q_dif < q_H
  bool fwd_condition_applies = false;  // q_L < q < q_H
  bool variant_disagreement = false;

  const ProfileStatus* find(StrategyKind k) const {
    for (const auto& s : profiles) {
      if (s.strategy.kind() == k) return &s;
    }
    return nullptr;
  }
};

// Socially optimal equilibrium under aligned utilities: the better of the
// differentiating and forwarding profiles. Exact ties select Forward.
inline EquilibriumReport aligned_optimum(const ModelParams& p) {
  require_valid(p);
  EquilibriumReport r;
  r.utilities = Utilities::kAligned;
  for (const auto& s : {FilterStrategy::forward(), FilterStrategy::differentiate(),
                        FilterStrategy::block()}) {
    r.profiles.push_back({s, evaluate(p, s, Utilities::kAligned),
                          check_equilibrium(p, s, Utilities::kAligned)});
  }
  const double v_fwd = r.profiles[0].evaluation.v_filter;
  const double v_dif = r.profiles[1].evaluation.v_filter;
  r.selected = v_dif > v_fwd + kPayoffTieTolerance ? FilterStrategy::differentiate()
                                                   : FilterStrategy::forward();
  r.selection_rule = SelectionRule::kSociallyOptimal;
  r.certificate = diff_vs_fwd_condition(p);
  return r;
}

enum class ParetoOrder { kADominates, kBDominates, kIncomparable, kEqual };

inline std::string to_string(ParetoOrder o) {
  switch (o) {
    case ParetoOrder::kADominates: return "a-dominates";
    case ParetoOrder::kBDominates: return "b-dominates";
    case ParetoOrder::kIncomparable: return "incomparable";
    case ParetoOrder::kEqual: return "equal";
  }
  return "?";
}

inline ParetoOrder pareto_compare(const ProfileEvaluation& a, const ProfileEvaluation& b) {
  if (a.normalization != b.normalization) {
    throw std::invalid_argument("pareto_compare: normalization mismatch");
  }
  const bool a_ge = a.v_filter >= b.v_filter && a.v_consumer >= b.v_consumer;
  const bool b_ge = b.v_filter >= a.v_filter && b.v_consumer >= a.v_consumer;
  if (a_ge && b_ge) return ParetoOrder::kEqual;
  if (a_ge) return ParetoOrder::kADominates;
  if (b_ge) return ParetoOrder::kBDominates;
  return ParetoOrder::kIncomparable;
}

// Blocking rate on a malicious signal that makes a semi-aligned filter
// indifferent at that signal: solves Lambda = pi0(1 - pi1 g) / (pi1(1 - pi0 g)).
inline double semi_mixed_gamma(const ModelParams& p) {
  const auto t = thresholds(p);
  return (p.pi0 - t.Lambda * p.pi1) / (p.pi0 * p.pi1 * (1.0 - t.Lambda));
}

// Per-content payoff difference, forward minus block, at a malicious filter
// signal when the consumer best-responds to Mixed(gamma, 0).
inline double signal0_forward_advantage(const ModelParams& p, double gamma) {
  const auto c = sustaining_policy(p, FilterStrategy::mixed(gamma, 0.0));
  const double mal = p.pi0 * p.q;
  const double clean = p.pi1 * (1.0 - p.q);
  const double forward =
      mal * (1.0 - c.pi_tilde0) * (-p.c2) + clean * (c.pi_tilde1 * (-p.c1) + (1.0 - c.pi_tilde1) * p.b);
  const double block = clean * (-p.c1);
  return forward - block;
}

struct InefficiencyResult {
  bool inefficient = false;
  bool premise = false;         // q_L < q_dif < q_H < q
  bool quality_below = false;   // Q_quality < Lambda
  bool dif_dominates = false;   // strictly, both players, over Forward and Block
  bool dif_is_equilibrium = false;
  double deviation_gain = 0.0;  // filter's gain from Differentiate to Forward
  ProfileEvaluation dif;
  ProfileEvaluation best_equilibrium;
};

inline InefficiencyResult inefficiency_check(const ModelParams& p) {
  require_valid(p);
  const auto t = thresholds(p);
  const double q_dif = differentiate_posterior(p).value;
  InefficiencyResult r;
  r.premise = t.q_L < q_dif && q_dif < t.q_H && t.q_H < p.q;
  r.quality_below = t.Q_quality < t.Lambda;
  r.dif = evaluate(p, FilterStrategy::differentiate(), Utilities::kSemiAligned);
  const auto fwd = evaluate(p, FilterStrategy::forward(), Utilities::kSemiAligned);
  const auto blk = evaluate(p, FilterStrategy::block(), Utilities::kSemiAligned);
  auto strictly = [&](const ProfileEvaluation& other) {
    return r.dif.v_filter > other.v_filter && r.dif.v_consumer > other.v_consumer;
  };
  r.dif_dominates = strictly(fwd) && strictly(blk);
  r.best_equilibrium = fwd;
  const auto check = check_equilibrium(p, FilterStrategy::differentiate(), Utilities::kSemiAligned);
  r.dif_is_equilibrium = check.is_equilibrium;
  const auto c = sustaining_policy(p, FilterStrategy::differentiate());
  r.deviation_gain =
      filter_payoff_against(p, FilterStrategy::forward(), c, Utilities::kSemiAligned) -
      filter_payoff_against(p, FilterStrategy::differentiate(), c, Utilities::kSemiAligned);
  r.inefficient = r.premise && r.quality_below && r.dif_dominates;
  return r;
}

// Equilibrium existence under semi-aligned utilities, checked by unilateral
// deviations and compared with the closed-form conditions.
inline EquilibriumReport semi_equilibrium_status(const ModelParams& p) {
  require_valid(p);
  const auto t = thresholds(p);
  const double q_dif = differentiate_posterior(p).value;
  EquilibriumReport r;
  r.utilities = Utilities::kSemiAligned;
  for (const auto& s : {FilterStrategy::forward(), FilterStrategy::differentiate(),
                        FilterStrategy::block()}) {
    r.profiles.push_back({s, evaluate(p, s, Utilities::kSemiAligned),
                          check_equilibrium(p, s, Utilities::kSemiAligned)});
  }
  r.dif_condition = t.Q_quality > t.Lambda;
  r.fwd_condition = p.pi0 / p.pi1 < t.Lambda;
  r.dif_condition_applies = t.q_L < q_dif && q_dif < t.q_H;
  r.fwd_condition_applies = t.q_L < p.q && p.q < t.q_H;

  bool mixed_found = false;
  if (r.dif_condition && r.fwd_condition) {
    const double g = semi_mixed_gamma(p);
    if (g > 0.0 && g < 1.0) {
      const auto s = FilterStrategy::mixed(g, 0.0);
      const auto check =
          check_equilibrium(p, s, Utilities::kSemiAligned, kMixedIndifferenceTolerance);
      if (check.is_equilibrium) {
        r.mixed_gamma = g;
        r.profiles.push_back({s, evaluate(p, s, Utilities::kSemiAligned), check});
        mixed_found = true;
      }
    }
  }
  if (r.dif_condition_applies && r.fwd_condition_applies) {
    r.variant_disagreement = mixed_found != (r.dif_condition && r.fwd_condition);
  }

  // Pareto-dominant equilibrium, if one exists.
  for (const auto& a : r.profiles) {
    if (!a.check.is_equilibrium) continue;
    bool dominates_all = true;
    for (const auto& b : r.profiles) {
      if (&a == &b || !b.check.is_equilibrium) continue;
      const auto o = pareto_compare(a.evaluation, b.evaluation);
      if (o != ParetoOrder::kADominates && o != ParetoOrder::kEqual) dominates_all = false;
    }
    if (dominates_all) {
      r.selected = a.strategy;
      r.selection_rule = SelectionRule::kParetoDominant;
      break;
    }
  }
  r.inefficiency = inefficiency_check(p).inefficient;
  return r;
}

struct OvercomeThresholds {
  std::optional<double> pi0_threshold;  // smallest pi0 (pi1 fixed) clearing both barriers
  std::optional<double> pi1_threshold;  // largest pi1 (pi0 fixed) clearing both barriers
};

// Both barriers cleared: q_dif < q_H and V(dif) > V(fwd) under aligned
// utilities.
inline bool clears_barriers(const ModelParams& p) {
  const auto t = thresholds(p);
  if (!(differentiate_posterior(p).value < t.q_H)) return false;
  const double v_dif = evaluate(p, FilterStrategy::differentiate(), Utilities::kAligned).v_filter;
  const double v_fwd = evaluate(p, FilterStrategy::forward(), Utilities::kAligned).v_filter;
  return v_dif > v_fwd + kPayoffTieTolerance;
}

// Edge of the open probability interval used when searching to the boundary.
inline constexpr double kProbabilityEdge = 1e-12;

inline OvercomeThresholds overcome_thresholds(const ModelParams& p) {
  require_valid(p);
  OvercomeThresholds out;
  {
    auto pred = [&](double x) { return clears_barriers(p.with_signal(x, p.pi1)); };
    const double lo = p.pi1;
    const double hi = 1.0 - kProbabilityEdge;
    if (pred(hi)) {
      out.pi0_threshold = pred(lo) ? lo : bisect_boundary(pred, lo, hi);
    }
  }
  {
    auto pred = [&](double x) { return clears_barriers(p.with_signal(p.pi0, x)); };
    const double lo = kProbabilityEdge;
    const double hi = p.pi0;
    if (pred(lo)) {
      out.pi1_threshold = pred(hi) ? hi : bisect_boundary(pred, lo, hi);
    }
  }
  return out;
}

}  // namespace filtergame

#endif  // FILTERGAME_EQUILIBRIUM_HPP_
