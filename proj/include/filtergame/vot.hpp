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

// Marginal value of filter technology: derivatives of equilibrium payoffs
// with respect to pi0 (higher is better) and pi1 (lower is better).

#ifndef FILTERGAME_VOT_HPP_
#define FILTERGAME_VOT_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/payoffs.hpp"

namespace filtergame {

enum class MvotRegime {
  kZero,
  kConstant,
  kNonConstant,
  kSemiFilterConstant,
  kSemiConsumerNonLinear,
  kNumericOnly,
};

enum class MvotMethod { kAnalytic, kFiniteDifference };

inline std::string to_string(MvotRegime r) {
  switch (r) {
    case MvotRegime::kZero: return "zero";
    case MvotRegime::kConstant: return "constant";
    case MvotRegime::kNonConstant: return "non-constant";
    case MvotRegime::kSemiFilterConstant: return "semi-filter-constant";
    case MvotRegime::kSemiConsumerNonLinear: return "semi-consumer-non-linear";
    case MvotRegime::kNumericOnly: return "numeric-only";
  }
  return "?";
}

struct MvotReport {
  double d_pi0 = 0.0;
  double d_pi1 = 0.0;
  MvotRegime regime = MvotRegime::kZero;
  MvotMethod method = MvotMethod::kAnalytic;
};

// |V(dif) - V(fwd)| below this is a tie and selects the zero regime.
inline constexpr double kPayoffTieTolerance = 1e-12;

// Where a belief sits relative to (q_L, q_H), using the consumer's own
// convention: at q_L accept everything, at q_H ignore everything.
enum class BeliefRegime { kBelowLow, kInterior, kAboveHigh };

inline BeliefRegime belief_regime(const ModelParams& p, double belief) {
  switch (best_response(p, belief).mode) {
    case ConsumerMode::kAcceptAll: return BeliefRegime::kBelowLow;
    case ConsumerMode::kIgnoreAll: return BeliefRegime::kAboveHigh;
    case ConsumerMode::kInterior: break;
  }
  return BeliefRegime::kInterior;
}

// Analytic MVoT of the socially optimal aligned payoff max(V(dif), V(fwd)),
// per clean item.
inline MvotReport mvot_aligned(const ModelParams& p) {
  require_valid(p);
  const auto t = thresholds(p);
  const double v_dif = evaluate(p, FilterStrategy::differentiate(), Utilities::kAligned).v_filter;
  const double v_fwd = evaluate(p, FilterStrategy::forward(), Utilities::kAligned).v_filter;
  const double q_dif = differentiate_posterior(p).value;
  const auto regime = belief_regime(p, q_dif);

  MvotReport r;
  if (regime == BeliefRegime::kAboveHigh || v_dif < v_fwd + kPayoffTieTolerance) {
    r.regime = MvotRegime::kZero;
    return r;
  }
  const double odds = p.q / (1.0 - p.q);
  if (regime == BeliefRegime::kBelowLow) {
    r.regime = MvotRegime::kConstant;
    r.d_pi0 = odds * p.c2;
    r.d_pi1 = -(p.c1 + p.b);
    return r;
  }
  r.regime = MvotRegime::kNonConstant;
  r.d_pi0 = odds * p.lambda * std::log(t.q_H / q_dif);
  r.d_pi1 = p.lambda * std::log(t.q_H_complement / (1.0 - q_dif));
  return r;
}

struct SemiMvot {
  MvotReport filter;
  MvotReport consumer;
};

// Analytic MVoT of the filter's and consumer's payoffs under a fixed pure
// profile with semi-aligned utilities. Forward gives zero for both. Under
// Differentiate the filter's payoff is affine in (pi0, pi1) on each side of
// q_L and the consumer's is the aligned welfare of that profile.
inline SemiMvot mvot_semialigned(const ModelParams& p, const FilterStrategy& profile,
                                 Normalization n = Normalization::kPerClean) {
  require_valid(p);
  const auto kind = profile.kind();
  if (kind != StrategyKind::kForward && kind != StrategyKind::kDifferentiate) {
    throw std::invalid_argument("mvot_semialigned: profile must be forward or differentiate");
  }
  SemiMvot out;
  if (kind == StrategyKind::kForward) return out;

  const double scale = normalization_scale(p, n);
  const auto t = thresholds(p);
  const auto e = CostExponentials::from(p);
  const double q_dif = differentiate_posterior(p).value;
  switch (belief_regime(p, q_dif)) {
    case BeliefRegime::kAboveHigh:
      return out;
    case BeliefRegime::kBelowLow:
      // Consumer accepts everything; per-content payoffs are affine.
      out.filter.regime = out.consumer.regime = MvotRegime::kConstant;
      out.filter.d_pi0 = out.consumer.d_pi0 = p.q * p.c2 * scale;
      out.filter.d_pi1 = out.consumer.d_pi1 = -(1.0 - p.q) * (p.b + p.c1) * scale;
      return out;
    case BeliefRegime::kInterior:
      break;
  }
  // Positive because accepting is optimal at q_L.
  const double bracket = t.q_L_complement * (p.b + p.c1) - t.q_L * p.c2;
  out.filter.regime = MvotRegime::kSemiFilterConstant;
  out.filter.d_pi0 = p.q * e.ec1 / (e.eb - e.ec1) * bracket * scale;
  out.filter.d_pi1 = -(1.0 - p.q) / (1.0 - e.ec2) * bracket * scale;

  // Per clean: q/(1-q) lambda log(q_H/q_dif) and lambda log((1-q_H)/(1-q_dif)).
  const double per_clean_to_n = (1.0 - p.q) * scale;
  out.consumer.regime = MvotRegime::kSemiConsumerNonLinear;
  out.consumer.d_pi0 =
      p.q / (1.0 - p.q) * p.lambda * std::log(t.q_H / q_dif) * per_clean_to_n;
  out.consumer.d_pi1 = p.lambda * std::log(t.q_H_complement / (1.0 - q_dif)) * per_clean_to_n;
  return out;
}

enum class Player { kFilter, kConsumer };

namespace detail {

inline std::optional<BeliefRegime> profile_regime(const ModelParams& p,
                                                  const FilterStrategy& s) {
  if (s.kind() == StrategyKind::kBlock) return std::nullopt;
  return belief_regime(p, posterior(p, s).value);
}

inline std::string regime_boundary_name(BeliefRegime a, BeliefRegime b) {
  if (a == BeliefRegime::kBelowLow || b == BeliefRegime::kBelowLow) {
    if (a == BeliefRegime::kAboveHigh || b == BeliefRegime::kAboveHigh) return "q_L and q_H";
    return "q_L";
  }
  return "q_H";
}

}  // namespace detail

// Central finite differences of a fixed profile's payoff in pi0 and pi1.
// Throws if a stepped point is invalid or if the forwarded-content belief
// changes regime between the stepped points.
inline MvotReport finite_difference(const ModelParams& p, const FilterStrategy& profile,
                                    Utilities u, double step,
                                    Player player = Player::kFilter,
                                    Normalization n = Normalization::kPerClean) {
  if (!(step > 0.0)) throw std::invalid_argument("finite_difference: step must be > 0");
  require_valid(p);
  const ModelParams points[4] = {
      p.with_signal(p.pi0 + step, p.pi1), p.with_signal(p.pi0 - step, p.pi1),
      p.with_signal(p.pi0, p.pi1 + step), p.with_signal(p.pi0, p.pi1 - step)};
  for (const auto& pt : points) {
    if (auto v = validate(pt); !v.empty()) {
      throw std::invalid_argument("finite_difference: step leaves the valid region (" +
                                  describe(v) + ")");
    }
  }
  const auto center = detail::profile_regime(p, profile);
  for (const auto& pt : points) {
    const auto r = detail::profile_regime(pt, profile);
    if (r != center) {
      throw std::domain_error("finite_difference: step crosses the belief boundary " +
                              detail::regime_boundary_name(*center, *r));
    }
  }
  auto value = [&](const ModelParams& pt) {
    const auto ev = evaluate(pt, profile, u, n);
    return player == Player::kFilter ? ev.v_filter : ev.v_consumer;
  };
  MvotReport r;
  r.method = MvotMethod::kFiniteDifference;
  r.regime = MvotRegime::kNumericOnly;
  r.d_pi0 = (value(points[0]) - value(points[1])) / (2.0 * step);
  r.d_pi1 = (value(points[2]) - value(points[3])) / (2.0 * step);
  return r;
}

}  // namespace filtergame

#endif  // FILTERGAME_VOT_HPP_
